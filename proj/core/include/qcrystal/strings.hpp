#pragma once

#include "qcrystal/tableau_a.hpp"

namespace qcrystal {

// Type A crystal element stored as its string multiplicities f(k', k) over a fixed shape.
struct StringElement {
  std::vector<int> shape;
  StringTable f;  // zero entries are omitted
  bool operator==(const StringElement&) const = default;
};

StringElement strings_of(const CartanSpec& spec, const Tableau& t);
Tableau tableau_of(const StringElement& s);

class StringModelA {
 public:
  using Element = StringElement;
  StringModelA(CartanSpec spec, std::vector<int> lambda);

  const CartanSpec& spec() const { return spec_; }
  const std::vector<int>& lambda() const { return lambda_; }
  std::string name() const { return "strings"; }
  StringElement root() const { return {shape_, {}}; }
  // Number of empty strings (entries p) in row p.
  int empties(const StringElement& s, int p) const;
  // Rows top to bottom; row p contributes its (i+1)-entries as minus signs, then its i-entries as plus signs.
  SignedWord signed_word(const StringElement& s, int i) const;
  std::string key(const StringElement& s) const;
  std::optional<StringElement> apply(const StringElement& s, int i, Dir dir) const;
  std::pair<int, int> string_lengths(const StringElement& s, int i) const;
  std::vector<int> drop(const StringElement& s) const;
  json payload(const StringElement& s) const;
  StringElement from_payload(const json& j) const;
  std::string label(const StringElement& s) const;

 private:
  int count(const StringElement& s, int p, int k) const;
  CartanSpec spec_;
  std::vector<int> lambda_;
  std::vector<int> shape_;
};

}  // namespace qcrystal
