#include "qcrystal/tableau_a.hpp"

#include <cctype>
#include <sstream>

namespace qcrystal {

std::string render(const Tableau& t) {
  std::ostringstream os;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r) os << "\n";
    for (size_t c = 0; c < t.rows[r].size(); ++c) os << (c ? " " : "") << t.rows[r][c];
  }
  return os.str();
}

Tableau parse_tableau(const std::string& text) {
  Tableau t;
  std::vector<int> row;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      row.push_back(ch - '0');
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!row.empty()) t.rows.push_back(row);
      row.clear();
    } else if (ch != '(' && ch != ')') {
      throw std::invalid_argument(std::string("unexpected character in tableau: ") + ch);
    }
  }
  if (!row.empty()) t.rows.push_back(row);
  return t;
}

bool is_semistandard(const Tableau& t, int n) {
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n || row[c] < static_cast<int>(r) + 1) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
    }
  }
  return true;
}

std::vector<int> shape_from_weight_a(const CartanSpec& spec, const std::vector<int>& w) {
  if (spec.kind() != Kind::FinA) throw std::invalid_argument("type A tableaux need a FinA spec");
  if (static_cast<int>(w.size()) != spec.size()) throw std::invalid_argument("weight length mismatch");
  std::vector<int> shape(w.size(), 0);
  int acc = 0;
  for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
    if (w[k] < 0) throw std::invalid_argument("weight is not dominant");
    acc += w[k];
    shape[k] = acc;
  }
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  return shape;
}

std::vector<Box> far_eastern_order(const Tableau& t) {
  std::vector<Box> out;
  int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
  for (int c = width - 1; c >= 0; --c)
    for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
      if (c < static_cast<int>(t.rows[r].size())) out.push_back({r, c});
  return out;
}

std::vector<int> far_eastern_word(const Tableau& t) {
  std::vector<int> out;
  for (auto b : far_eastern_order(t)) out.push_back(t.rows[b.row][b.col]);
  return out;
}

DimensionVector dimension_vector(const CartanSpec& spec, const Tableau& t) {
  DimensionVector d;
  d.v.assign(spec.size(), 0);
  for (size_t r = 0; r < t.rows.size(); ++r) {
    int p = static_cast<int>(r) + 1;
    for (int entry : t.rows[r]) {
      if (entry == p) continue;
      d.f[{p, entry - 1}] += 1;
      for (int i = p; i <= entry - 1; ++i) d.v[spec.index(i)] += 1;
    }
  }
  return d;
}

EpsWeight tableau_weight(const CartanSpec& spec, const Tableau& t) {
  EpsWeight w{std::vector<Rational>(spec.rank(), Rational(0))};
  for (const auto& row : t.rows)
    for (int e : row) w.coeffs.at(e - 1) += 1;
  return w;
}

TableauAModel::TableauAModel(CartanSpec spec, std::vector<int> lambda) : spec_(std::move(spec)), lambda_(std::move(lambda)) {
  shape_from_weight_a(spec_, lambda_);
}

Tableau TableauAModel::root() const {
  Tableau t;
  auto shape = shape_from_weight_a(spec_, lambda_);
  for (size_t r = 0; r < shape.size(); ++r) t.rows.emplace_back(shape[r], static_cast<int>(r) + 1);
  return t;
}

std::string TableauAModel::key(const Tableau& t) const {
  std::ostringstream os;
  os << t.rows.size();
  for (const auto& row : t.rows) {
    os << "|" << row.size() << ":";
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
  }
  return os.str();
}

SignedWord TableauAModel::signed_word(const Tableau& t, int i) const {
  spec_.index(i);
  SignedWord w;
  auto order = far_eastern_order(t);
  for (size_t k = 0; k < order.size(); ++k) {
    int e = t.rows[order[k].row][order[k].col];
    w.push_back({static_cast<int>(k), e == i + 1 ? 1 : 0, e == i ? 1 : 0});
  }
  return w;
}

std::optional<Tableau> TableauAModel::apply(const Tableau& t, int i, Dir dir) const {
  auto word = signed_word(t, i);
  auto k = tensor_apply(word, dir);
  if (!k) return std::nullopt;
  Box b = far_eastern_order(t)[*k];
  Tableau out = t;
  out.rows[b.row][b.col] += dir == Dir::Lower ? 1 : -1;
  return out;
}

std::pair<int, int> TableauAModel::string_lengths(const Tableau& t, int i) const {
  auto r = reduce_signature(signed_word(t, i));
  return {r.eps(), r.phi()};
}

std::vector<int> TableauAModel::drop(const Tableau& t) const { return dimension_vector(spec_, t).v; }

json TableauAModel::payload(const Tableau& t) const { return json{{"rows", t.rows}}; }

Tableau TableauAModel::from_payload(const json& j) const {
  Tableau t{j.at("rows").get<std::vector<std::vector<int>>>()};
  if (!is_semistandard(t, spec_.rank())) throw std::invalid_argument("payload is not a semistandard tableau");
  return t;
}

}  // namespace qcrystal
