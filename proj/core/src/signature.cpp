#include "qcrystal/signature.hpp"

#include <stdexcept>

namespace qcrystal {

ReducedSignature reduce_signature(const SignedWord& word) {
  ReducedSignature out;
  for (const auto& f : word) {
    if (f.minus < 0 || f.plus < 0) throw std::invalid_argument("negative sign count");
    for (int k = 0; k < f.minus; ++k) {
      if (!out.plus.empty())
        out.plus.pop_back();
      else
        out.minus.push_back(f.index);
    }
    for (int k = 0; k < f.plus; ++k) out.plus.push_back(f.index);
  }
  return out;
}

std::optional<int> tensor_apply(const SignedWord& word, Dir dir) {
  ReducedSignature r = reduce_signature(word);
  if (dir == Dir::Lower) {
    if (r.plus.empty()) return std::nullopt;
    return r.plus.front();
  }
  if (r.minus.empty()) return std::nullopt;
  return r.minus.back();
}

}  // namespace qcrystal
