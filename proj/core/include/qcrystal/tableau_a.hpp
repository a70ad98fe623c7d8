#pragma once

#include "qcrystal/graph.hpp"

#include <map>

namespace qcrystal {

struct Tableau {
  std::vector<std::vector<int>> rows;
  bool operator==(const Tableau&) const = default;
};

std::string render(const Tableau& t);
Tableau parse_tableau(const std::string& text);  // rows separated by ',' or whitespace, single-digit entries
bool is_semistandard(const Tableau& t, int n);

// Position of one box, row and column 0-based.
struct Box {
  int row = 0;
  int col = 0;
  bool operator==(const Box&) const = default;
};

// f_T(k', k): number of entries k+1 in row k' (rows 1-based), keyed by (k', k).
using StringTable = std::map<std::pair<int, int>, int>;

struct DimensionVector {
  StringTable f;
  std::vector<int> v;  // by vertex position
};

std::vector<int> shape_from_weight_a(const CartanSpec& spec, const std::vector<int>& w);
std::vector<Box> far_eastern_order(const Tableau& t);
std::vector<int> far_eastern_word(const Tableau& t);
DimensionVector dimension_vector(const CartanSpec& spec, const Tableau& t);
EpsWeight tableau_weight(const CartanSpec& spec, const Tableau& t);

class TableauAModel {
 public:
  using Element = Tableau;
  TableauAModel(CartanSpec spec, std::vector<int> lambda);

  const CartanSpec& spec() const { return spec_; }
  const std::vector<int>& lambda() const { return lambda_; }
  std::string name() const { return "tableaux"; }
  Tableau root() const;
  std::string key(const Tableau& t) const;
  SignedWord signed_word(const Tableau& t, int i) const;
  std::optional<Tableau> apply(const Tableau& t, int i, Dir dir) const;
  std::pair<int, int> string_lengths(const Tableau& t, int i) const;
  std::vector<int> drop(const Tableau& t) const;
  json payload(const Tableau& t) const;
  Tableau from_payload(const json& j) const;
  std::string label(const Tableau& t) const { return render(t); }

 private:
  CartanSpec spec_;
  std::vector<int> lambda_;
};

}  // namespace qcrystal
