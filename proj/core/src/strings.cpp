#include "qcrystal/strings.hpp"

#include <sstream>

namespace qcrystal {

StringElement strings_of(const CartanSpec& spec, const Tableau& t) {
  StringElement s;
  for (const auto& row : t.rows) s.shape.push_back(static_cast<int>(row.size()));
  s.f = dimension_vector(spec, t).f;
  return s;
}

Tableau tableau_of(const StringElement& s) {
  Tableau t;
  for (size_t r = 0; r < s.shape.size(); ++r) {
    int p = static_cast<int>(r) + 1;
    std::vector<int> row;
    for (const auto& [pk, c] : s.f)
      if (pk.first == p) row.insert(row.end(), c, pk.second + 1);
    int empties = s.shape[r] - static_cast<int>(row.size());
    if (empties < 0) throw std::invalid_argument("string table overfills a row");
    row.insert(row.begin(), empties, p);
    t.rows.push_back(row);
  }
  return t;
}

StringModelA::StringModelA(CartanSpec spec, std::vector<int> lambda)
    : spec_(std::move(spec)), lambda_(std::move(lambda)), shape_(shape_from_weight_a(spec_, lambda_)) {}

int StringModelA::count(const StringElement& s, int p, int k) const {
  auto it = s.f.find({p, k});
  return it == s.f.end() ? 0 : it->second;
}

int StringModelA::empties(const StringElement& s, int p) const {
  int used = 0;
  for (const auto& [pk, c] : s.f)
    if (pk.first == p) used += c;
  return s.shape.at(p - 1) - used;
}

SignedWord StringModelA::signed_word(const StringElement& s, int i) const {
  spec_.index(i);
  SignedWord w;
  for (int p = 1; p <= static_cast<int>(s.shape.size()) && p <= i + 1; ++p) {
    int minus = p <= i ? count(s, p, i) : empties(s, p);
    int plus = p == i ? empties(s, p) : p < i ? count(s, p, i - 1) : 0;
    w.push_back({p, minus, plus});
  }
  return w;
}

std::string StringModelA::key(const StringElement& s) const {
  std::ostringstream os;
  for (size_t r = 0; r < s.shape.size(); ++r) os << (r ? "," : "") << s.shape[r];
  for (const auto& [pk, c] : s.f) os << "|" << pk.first << ":" << pk.second << "x" << c;
  return os.str();
}

std::optional<StringElement> StringModelA::apply(const StringElement& s, int i, Dir dir) const {
  auto p = tensor_apply(signed_word(s, i), dir);
  if (!p) return std::nullopt;
  if (*p > i) throw std::logic_error("row below i has no movable string");
  StringElement out = s;
  // lowering turns an entry i into i+1: string (p, i-1) becomes (p, i)
  std::pair<int, int> from{*p, i - 1}, to{*p, i};
  if (dir == Dir::Raise) std::swap(from, to);
  if (from.second >= from.first && --out.f[from] == 0) out.f.erase(from);
  if (to.second >= to.first) out.f[to] += 1;
  return out;
}

std::pair<int, int> StringModelA::string_lengths(const StringElement& s, int i) const {
  auto r = reduce_signature(signed_word(s, i));
  return {r.eps(), r.phi()};
}

std::vector<int> StringModelA::drop(const StringElement& s) const {
  std::vector<int> v(spec_.size(), 0);
  for (const auto& [pk, c] : s.f)
    for (int i = pk.first; i <= pk.second; ++i) v[spec_.index(i)] += c;
  return v;
}

json StringModelA::payload(const StringElement& s) const {
  json strings = json::array();
  for (const auto& [pk, c] : s.f) strings.push_back({pk.first, pk.second, c});
  return json{{"shape", s.shape}, {"strings", strings}};
}

StringElement StringModelA::from_payload(const json& j) const {
  StringElement s;
  s.shape = j.at("shape").get<std::vector<int>>();
  if (s.shape != shape_) throw std::invalid_argument("payload shape does not match the weight");
  for (const auto& e : j.at("strings")) {
    int p = e.at(0).get<int>(), k = e.at(1).get<int>(), c = e.at(2).get<int>();
    if (c <= 0 || k < p) throw std::invalid_argument("invalid string multiplicity");
    s.f[{p, k}] = c;
  }
  if (!is_semistandard(tableau_of(s), spec_.rank())) throw std::invalid_argument("payload strings do not form a tableau");
  return s;
}

std::string StringModelA::label(const StringElement& s) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [pk, c] : s.f) {
    os << (first ? "" : " ") << "V(" << pk.first << "," << pk.second << ")";
    if (c > 1) os << "^" << c;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace qcrystal
