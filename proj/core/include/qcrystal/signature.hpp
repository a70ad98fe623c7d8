#pragma once

#include <optional>
#include <vector>

namespace qcrystal {

enum class Dir { Raise, Lower };

struct SignFactor {
  int index = 0;
  int minus = 0;  // epsilon_i of the factor
  int plus = 0;   // phi_i of the factor
};

using SignedWord = std::vector<SignFactor>;

// Survivor factor indices in word order, one entry per surviving sign.
struct ReducedSignature {
  std::vector<int> minus;
  std::vector<int> plus;
  int eps() const { return static_cast<int>(minus.size()); }
  int phi() const { return static_cast<int>(plus.size()); }
};

ReducedSignature reduce_signature(const SignedWord& word);
std::optional<int> tensor_apply(const SignedWord& word, Dir dir);

}  // namespace qcrystal
