#pragma once

#include "qcrystal/tableau_a.hpp"

namespace qcrystal {

// Letters are nonzero integers: i for i, -i for i-bar.
using DLetter = int;

int d_rank(DLetter x, int n);
// Strict order; n and n-bar are incomparable.
bool d_less(DLetter a, DLetter b, int n);
std::string d_letter_string(DLetter x);
EpsWeight d_letter_weight(DLetter x, int n);

struct SpinColumn {
  std::vector<DLetter> letters;  // sorted by d_rank
  int sign = 1;
  bool operator==(const SpinColumn&) const = default;
};

SpinColumn make_spin(std::vector<bool> barred, int n);  // barred[k] for index k+1
bool spin_valid(const SpinColumn& s, int n);
bool spin_has(const SpinColumn& s, DLetter x);

struct DShape {
  std::vector<Rational> lambdas;
  bool spin = false;
  int sign = 1;
};

struct DTableau {
  std::vector<std::vector<DLetter>> rows;
  std::optional<SpinColumn> spin;
  bool operator==(const DTableau&) const = default;
};

DShape shape_from_weight_d(const CartanSpec& spec, const std::vector<int>& w);
DTableau hw_tableau(const CartanSpec& spec, const DShape& shape);

std::optional<DLetter> vector_crystal_step(DLetter x, int i, Dir dir, int n);
std::optional<SpinColumn> spin_step(const SpinColumn& s, int i, Dir dir, int n);
std::pair<int, int> letter_lengths(DLetter x, int i, int n);
std::pair<int, int> spin_lengths(const SpinColumn& s, int i, int n);

EpsWeight d_weight(const DTableau& t, int n);
bool is_d_semistandard(const DTableau& t, int n);
std::string render(const DTableau& t);

class TableauDModel {
 public:
  using Element = DTableau;
  TableauDModel(CartanSpec spec, std::vector<int> lambda);

  const CartanSpec& spec() const { return spec_; }
  const std::vector<int>& lambda() const { return lambda_; }
  std::string name() const { return "dtableaux"; }
  const DShape& shape() const { return shape_; }
  DTableau root() const { return hw_tableau(spec_, shape_); }
  std::string key(const DTableau& t) const;
  // Far-Eastern factors over body boxes; the spin column, if any, is the final factor (row -1).
  std::vector<Box> reading(const DTableau& t) const;
  SignedWord signed_word(const DTableau& t, int i) const;
  std::optional<DTableau> apply(const DTableau& t, int i, Dir dir) const;
  std::pair<int, int> string_lengths(const DTableau& t, int i) const;
  std::vector<int> drop(const DTableau& t) const;
  json payload(const DTableau& t) const;
  DTableau from_payload(const json& j) const;
  std::string label(const DTableau& t) const { return render(t); }

 private:
  CartanSpec spec_;
  std::vector<int> lambda_;
  DShape shape_;
};

}  // namespace qcrystal
