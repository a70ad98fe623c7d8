#include "qcrystal/tableau_d.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qcrystal {

int d_rank(DLetter x, int n) {
  if (x == 0 || std::abs(x) > n) throw std::invalid_argument("letter out of range");
  return x > 0 ? x : 2 * n + 1 + x;
}

bool d_less(DLetter a, DLetter b, int n) {
  if (std::abs(a) == n && std::abs(b) == n && a != b) return false;
  return d_rank(a, n) < d_rank(b, n);
}

std::string d_letter_string(DLetter x) { return x > 0 ? std::to_string(x) : std::to_string(-x) + "'"; }

EpsWeight d_letter_weight(DLetter x, int n) {
  EpsWeight w{std::vector<Rational>(n, Rational(0))};
  w.coeffs.at(std::abs(x) - 1) = x > 0 ? 1 : -1;
  return w;
}

SpinColumn make_spin(std::vector<bool> barred, int n) {
  if (static_cast<int>(barred.size()) != n) throw std::invalid_argument("spin column needs n entries");
  SpinColumn s;
  int nbar = 0;
  for (int k = 1; k <= n; ++k) {
    s.letters.push_back(barred[k - 1] ? -k : k);
    nbar += barred[k - 1];
  }
  std::sort(s.letters.begin(), s.letters.end(), [n](DLetter a, DLetter b) { return d_rank(a, n) < d_rank(b, n); });
  s.sign = nbar % 2 == 0 ? 1 : -1;
  return s;
}

bool spin_valid(const SpinColumn& s, int n) {
  if (static_cast<int>(s.letters.size()) != n) return false;
  std::vector<int> seen(n + 1, 0);
  int nbar = 0;
  for (size_t k = 0; k < s.letters.size(); ++k) {
    DLetter x = s.letters[k];
    if (x == 0 || std::abs(x) > n || seen[std::abs(x)]++) return false;
    if (k > 0 && d_rank(s.letters[k - 1], n) >= d_rank(x, n)) return false;
    nbar += x < 0;
    // position of n or n-bar fixes the parity class
    if (std::abs(x) == n) {
      int pos = static_cast<int>(k) + 1;
      bool even = (n - pos) % 2 == 0;
      if (x == n && even != (s.sign == 1)) return false;
      if (x == -n && even == (s.sign == 1)) return false;
    }
  }
  return (nbar % 2 == 0) == (s.sign == 1);
}

bool spin_has(const SpinColumn& s, DLetter x) { return std::find(s.letters.begin(), s.letters.end(), x) != s.letters.end(); }

DShape shape_from_weight_d(const CartanSpec& spec, const std::vector<int>& w) {
  if (spec.kind() != Kind::FinD) throw std::invalid_argument("type D tableaux need a FinD spec");
  int n = spec.rank();
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("weight length mismatch");
  for (int x : w)
    if (x < 0) throw std::invalid_argument("weight is not dominant");
  DShape s;
  Rational half_sum(w[n - 2] + w[n - 1], 2);
  s.lambdas.assign(n, Rational(0));
  Rational acc = half_sum;
  for (int i = n - 1; i >= 1; --i) {
    if (i <= n - 2) acc += w[i - 1];
    s.lambdas[i - 1] = acc;
  }
  s.lambdas[n - 1] = Rational(w[n - 1] - w[n - 2], 2);
  s.spin = (w[n - 2] + w[n - 1]) % 2 == 1;
  s.sign = s.lambdas[n - 1] < 0 ? -1 : 1;
  return s;
}

DTableau hw_tableau(const CartanSpec& spec, const DShape& shape) {
  int n = spec.rank();
  DTableau t;
  Rational cut = shape.spin ? Rational(1, 2) : Rational(0);
  for (int p = 1; p <= n; ++p) {
    Rational len = (p == n ? (shape.lambdas[n - 1] < 0 ? -shape.lambdas[n - 1] : shape.lambdas[n - 1])
                           : shape.lambdas[p - 1]) -
                   cut;
    if (len.denominator() != 1) throw std::logic_error("non-integral body row");
    int l = static_cast<int>(len.numerator());
    if (l == 0) break;
    DLetter fill = p < n ? p : (shape.sign == 1 ? n : -n);
    t.rows.emplace_back(l, fill);
  }
  if (shape.spin) {
    std::vector<bool> barred(n, false);
    barred[n - 1] = shape.sign < 0;
    t.spin = make_spin(barred, n);
  }
  return t;
}

std::optional<DLetter> vector_crystal_step(DLetter x, int i, Dir dir, int n) {
  if (i < 1 || i > n) throw std::out_of_range("color out of range");
  if (dir == Dir::Lower) {
    if (i < n) {
      if (x == i) return i + 1;
      if (x == -(i + 1)) return -i;
    } else {
      if (x == n - 1) return -n;
      if (x == n) return -(n - 1);
    }
  } else {
    if (i < n) {
      if (x == i + 1) return i;
      if (x == -i) return -(i + 1);
    } else {
      if (x == -n) return n - 1;
      if (x == -(n - 1)) return n;
    }
  }
  return std::nullopt;
}

std::optional<SpinColumn> spin_step(const SpinColumn& s, int i, Dir dir, int n) {
  if (i < 1 || i > n) throw std::out_of_range("color out of range");
  std::vector<bool> barred(n, false);
  for (DLetter x : s.letters)
    if (x < 0) barred[-x - 1] = true;
  if (i < n) {
    bool can = dir == Dir::Lower ? (!barred[i - 1] && barred[i]) : (barred[i - 1] && !barred[i]);
    if (!can) return std::nullopt;
    barred[i - 1] = !barred[i - 1];
    barred[i] = !barred[i];
  } else {
    bool want = dir == Dir::Lower ? false : true;
    if (barred[n - 2] != want || barred[n - 1] != want) return std::nullopt;
    barred[n - 2] = barred[n - 1] = !want;
  }
  return make_spin(barred, n);
}

std::pair<int, int> letter_lengths(DLetter x, int i, int n) {
  return {vector_crystal_step(x, i, Dir::Raise, n) ? 1 : 0, vector_crystal_step(x, i, Dir::Lower, n) ? 1 : 0};
}

std::pair<int, int> spin_lengths(const SpinColumn& s, int i, int n) {
  return {spin_step(s, i, Dir::Raise, n) ? 1 : 0, spin_step(s, i, Dir::Lower, n) ? 1 : 0};
}

EpsWeight d_weight(const DTableau& t, int n) {
  EpsWeight w{std::vector<Rational>(n, Rational(0))};
  for (const auto& row : t.rows)
    for (DLetter x : row) w.coeffs[std::abs(x) - 1] += x > 0 ? 1 : -1;
  if (t.spin)
    for (DLetter x : t.spin->letters) w.coeffs[std::abs(x) - 1] += Rational(x > 0 ? 1 : -1, 2);
  return w;
}

bool is_d_semistandard(const DTableau& t, int n) {
  for (size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row.empty()) return false;
    if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
    bool has_n = false, has_nbar = false;
    for (size_t c = 0; c < row.size(); ++c) {
      DLetter x = row[c];
      if (x == 0 || std::abs(x) > n) return false;
      has_n |= x == n;
      has_nbar |= x == -n;
      if (c > 0 && d_rank(row[c - 1], n) > d_rank(x, n)) return false;
      if (r > 0) {
        DLetter up = t.rows[r - 1][c];
        bool nn = std::abs(up) == n && std::abs(x) == n && up != x;
        if (!nn && !d_less(up, x, n)) return false;
      }
    }
    if (has_n && has_nbar) return false;
  }
  if (t.spin && !spin_valid(*t.spin, n)) return false;
  return true;
}

std::string render(const DTableau& t) {
  std::ostringstream os;
  if (t.spin) {
    os << "spin" << (t.spin->sign > 0 ? "+" : "-") << ":";
    for (DLetter x : t.spin->letters) os << " " << d_letter_string(x);
  }
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (r || t.spin) os << "\n";
    for (size_t c = 0; c < t.rows[r].size(); ++c) os << (c ? " " : "") << d_letter_string(t.rows[r][c]);
  }
  return os.str();
}

TableauDModel::TableauDModel(CartanSpec spec, std::vector<int> lambda)
    : spec_(std::move(spec)), lambda_(std::move(lambda)), shape_(shape_from_weight_d(spec_, lambda_)) {}

std::string TableauDModel::key(const DTableau& t) const {
  std::ostringstream os;
  os << t.rows.size();
  for (const auto& row : t.rows) {
    os << "|" << row.size() << ":";
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
  }
  if (t.spin) {
    os << "|s" << (t.spin->sign > 0 ? "+" : "-") << ":";
    for (size_t k = 0; k < t.spin->letters.size(); ++k) os << (k ? "," : "") << t.spin->letters[k];
  }
  return os.str();
}

std::vector<Box> TableauDModel::reading(const DTableau& t) const {
  std::vector<Box> out;
  int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
  for (int c = width - 1; c >= 0; --c)
    for (int r = 0; r < static_cast<int>(t.rows.size()); ++r)
      if (c < static_cast<int>(t.rows[r].size())) out.push_back({r, c});
  if (t.spin) out.push_back({-1, 0});
  return out;
}

SignedWord TableauDModel::signed_word(const DTableau& t, int i) const {
  spec_.index(i);
  int n = spec_.rank();
  SignedWord w;
  auto order = reading(t);
  for (size_t k = 0; k < order.size(); ++k) {
    Box b = order[k];
    auto [e, p] = b.row < 0 ? spin_lengths(*t.spin, i, n) : letter_lengths(t.rows[b.row][b.col], i, n);
    w.push_back({static_cast<int>(k), e, p});
  }
  return w;
}

std::optional<DTableau> TableauDModel::apply(const DTableau& t, int i, Dir dir) const {
  auto k = tensor_apply(signed_word(t, i), dir);
  if (!k) return std::nullopt;
  int n = spec_.rank();
  Box b = reading(t)[*k];
  DTableau out = t;
  if (b.row < 0) {
    auto s = spin_step(*t.spin, i, dir, n);
    if (!s) throw std::logic_error("selected spin factor cannot move");
    out.spin = *s;
  } else {
    auto x = vector_crystal_step(t.rows[b.row][b.col], i, dir, n);
    if (!x) throw std::logic_error("selected letter cannot move");
    out.rows[b.row][b.col] = *x;
  }
  return out;
}

std::pair<int, int> TableauDModel::string_lengths(const DTableau& t, int i) const {
  auto r = reduce_signature(signed_word(t, i));
  return {r.eps(), r.phi()};
}

std::vector<int> TableauDModel::drop(const DTableau& t) const {
  return drop_from_eps(spec_, lambda_, d_weight(t, spec_.rank()));
}

json TableauDModel::payload(const DTableau& t) const {
  json j{{"rows", t.rows}};
  j["spin"] = t.spin ? json{{"letters", t.spin->letters}, {"sign", t.spin->sign}} : json(nullptr);
  return j;
}

DTableau TableauDModel::from_payload(const json& j) const {
  DTableau t;
  t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
  if (j.contains("spin") && !j.at("spin").is_null())
    t.spin = SpinColumn{j.at("spin").at("letters").get<std::vector<int>>(), j.at("spin").at("sign").get<int>()};
  if (t.spin.has_value() != shape_.spin) throw std::invalid_argument("spin column presence does not match the weight");
  if (!is_d_semistandard(t, spec_.rank())) throw std::invalid_argument("payload is not a valid D tableau");
  return t;
}

}  // namespace qcrystal
