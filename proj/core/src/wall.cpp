#include "qcrystal/wall.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace qcrystal {

namespace {

bool has(unsigned mask, int c) { return (mask >> c) & 1u; }

}  // namespace

WallModel::WallModel(CartanSpec spec, int k) : spec_(std::move(spec)), k_(k) {
  if (spec_.kind() != Kind::AffD) throw std::invalid_argument("Young walls need an AffD spec");
  int n = spec_.rank();
  if (k != 0 && k != 1 && k != n - 1 && k != n) throw std::invalid_argument("level-one walls need k in {0,1,n-1,n}");
  lambda_.assign(n + 1, 0);
  lambda_[k] = 1;
  std::vector<std::vector<int>> up, down;
  for (int c = 2; c <= n - 2; ++c) up.push_back({c});
  for (int c = n - 2; c >= 2; --c) down.push_back({c});
  if (k <= 1) {
    pattern_.push_back({0, 1});
    pattern_.insert(pattern_.end(), up.begin(), up.end());
    pattern_.push_back({n - 1, n});
    pattern_.insert(pattern_.end(), down.begin(), down.end());
  } else {
    pattern_.push_back({n - 1, n});
    pattern_.insert(pattern_.end(), down.begin(), down.end());
    pattern_.push_back({0, 1});
    pattern_.insert(pattern_.end(), up.begin(), up.end());
  }
  // prefill alternates between the two halves of the ground cell, column by column
  int first = k == 0 ? 1 : k == 1 ? 0 : k == n ? n - 1 : n;
  int other = k == 0 ? 0 : k == 1 ? 1 : k == n ? n : n - 1;
  prefill_[0] = first;
  prefill_[1] = other;
}

ColumnState WallModel::column(const Wall& y, int j) const {
  return j < static_cast<int>(y.columns.size()) ? y.columns[j] : ground(j);
}

std::vector<int> WallModel::colors_of(const ColumnState& s, int m) const {
  if (m < s.full) return cell(m);
  std::vector<int> out;
  if (m == s.full)
    for (int c : cell(m))
      if (has(s.frontier, c)) out.push_back(c);
  return out;
}

bool WallModel::state_well_formed(const ColumnState& s, int j) const {
  if (s.full < 0) return false;
  unsigned allowed = 0;
  for (int c : cell(s.full)) allowed |= 1u << c;
  if ((s.frontier & ~allowed) != 0) return false;
  if (s.frontier == allowed) return false;
  if (s.full == 0 && !has(s.frontier, prefill(j))) return false;
  return true;
}

bool WallModel::column_supported(const Wall& y, int j) const {
  if (j == 0) return true;
  ColumnState s = column(y, j);
  ColumnState r = column(y, j - 1);
  for (int m = 0; m <= s.full; ++m) {
    const auto& c = cell(m);
    auto present = colors_of(s, m);
    if (m == 0) present.erase(std::remove(present.begin(), present.end(), prefill(j)), present.end());
    if (present.empty()) continue;
    if (c.size() == 1) {
      if (m >= r.full) return false;
      continue;
    }
    auto right = colors_of(r, m);
    for (int x : present) {
      int partner = x == c[0] ? c[1] : c[0];
      if (std::find(right.begin(), right.end(), partner) == right.end()) return false;
    }
  }
  return true;
}

bool WallModel::is_proper(const Wall& y) const {
  std::set<int> heights;
  for (const auto& s : y.columns)
    if (s.frontier == 0 && s.full > 0 && !heights.insert(s.full).second) return false;
  return true;
}

bool WallModel::is_valid(const Wall& y) const {
  for (int j = 0; j < static_cast<int>(y.columns.size()); ++j) {
    if (!state_well_formed(y.columns[j], j)) return false;
    if (!column_supported(y, j)) return false;
  }
  return is_proper(y);
}

Wall WallModel::normalize(Wall y) const {
  while (!y.columns.empty() && y.columns.back() == ground(static_cast<int>(y.columns.size()) - 1)) y.columns.pop_back();
  return y;
}

bool WallModel::delta_removable(const Wall& y, int j) const {
  if (j < 0 || j >= static_cast<int>(y.columns.size())) throw std::out_of_range("column out of range");
  ColumnState s = y.columns[j];
  ColumnState t;
  if (s.full - period() >= 1)
    t = {s.full - period(), s.frontier};
  else if (s.full == period() && s.frontier == (1u << prefill(j)))
    t = ground(j);
  else
    return false;
  Wall z = y;
  z.columns[j] = t;
  return is_valid(normalize(z));
}

bool WallModel::is_reduced(const Wall& y) const {
  for (int j = 0; j < static_cast<int>(y.columns.size()); ++j)
    if (delta_removable(y, j)) return false;
  return true;
}

std::optional<ColumnState> WallModel::add_block(const ColumnState& s, int i) const {
  const auto& c = cell(s.full);
  if (std::find(c.begin(), c.end(), i) == c.end() || has(s.frontier, i)) return std::nullopt;
  unsigned f = s.frontier | (1u << i);
  if (std::popcount(f) == static_cast<int>(c.size())) return ColumnState{s.full + 1, 0};
  return ColumnState{s.full, f};
}

std::optional<ColumnState> WallModel::remove_block(const ColumnState& s, int j, int i) const {
  bool at_ground = s.full == 0 && s.frontier == (1u << prefill(j));
  if (s.frontier != 0 && !at_ground) {
    if (!has(s.frontier, i) || (s.full == 0 && i == prefill(j))) return std::nullopt;
    return ColumnState{s.full, s.frontier & ~(1u << i)};
  }
  if (s.full == 0) return std::nullopt;
  const auto& c = cell(s.full - 1);
  if (std::find(c.begin(), c.end(), i) == c.end()) return std::nullopt;
  if (s.full - 1 == 0 && i == prefill(j)) return std::nullopt;
  unsigned rest = 0;
  for (int x : c)
    if (x != i) rest |= 1u << x;
  return ColumnState{s.full - 1, rest};
}

SignedWord WallModel::signed_word(const Wall& y, int i) const {
  spec_.index(i);
  SignedWord w;
  int len = static_cast<int>(y.columns.size());
  Wall ext = y;
  ext.columns.push_back(ground(len));
  for (int j = len; j >= 0; --j) {
    SignFactor f{j, 0, 0};
    ColumnState s = ext.columns[j];
    if (auto a = add_block(s, i)) {
      Wall z = ext;
      z.columns[j] = *a;
      if (is_valid(z)) f.plus = 1;
    }
    if (auto r = remove_block(s, j, i)) {
      Wall z = ext;
      z.columns[j] = *r;
      if (is_valid(z)) f.minus = 1;
    }
    w.push_back(f);
  }
  return w;
}

std::string WallModel::key(const Wall& y) const {
  std::ostringstream os;
  os << y.columns.size();
  for (const auto& s : y.columns) os << "|" << s.full << ":" << s.frontier;
  return os.str();
}

std::optional<Wall> WallModel::apply(const Wall& y, int i, Dir dir) const {
  auto j_opt = tensor_apply(signed_word(y, i), dir);
  if (!j_opt) return std::nullopt;
  int j = *j_opt;
  Wall z = y;
  if (j >= static_cast<int>(z.columns.size())) z.columns.push_back(ground(j));
  ColumnState s = z.columns[j];
  auto t = dir == Dir::Lower ? add_block(s, i) : remove_block(s, j, i);
  if (!t) throw std::logic_error("selected column cannot move");
  z.columns[j] = *t;
  return normalize(z);
}

std::pair<int, int> WallModel::string_lengths(const Wall& y, int i) const {
  auto r = reduce_signature(signed_word(y, i));
  return {r.eps(), r.phi()};
}

std::vector<WallBlock> WallModel::column_blocks(const ColumnState& s, int j) const {
  std::vector<WallBlock> out;
  for (int m = 0; m <= s.full; ++m)
    for (int c : colors_of(s, m)) {
      if (m == 0 && c == prefill(j)) continue;
      out.push_back({m, c});
    }
  return out;
}

std::vector<WallBlock> WallModel::column_blocks(const Wall& y, int j) const { return column_blocks(column(y, j), j); }

std::vector<int> WallModel::drop(const Wall& y) const {
  std::vector<int> k(spec_.size(), 0);
  for (int j = 0; j < static_cast<int>(y.columns.size()); ++j)
    for (const auto& b : column_blocks(y.columns[j], j)) k[spec_.index(b.color)] += 1;
  return k;
}

json WallModel::payload(const Wall& y) const {
  json cols = json::array();
  for (const auto& s : y.columns) {
    std::vector<int> f;
    for (int c = 0; c < 32; ++c)
      if (has(s.frontier, c)) f.push_back(c);
    cols.push_back({{"cells", s.full}, {"frontier", f}});
  }
  return json{{"k", k_}, {"columns", cols}};
}

Wall WallModel::from_payload(const json& j) const {
  if (j.at("k").get<int>() != k_) throw std::invalid_argument("payload is for a different ground state");
  Wall y;
  for (const auto& c : j.at("columns")) {
    ColumnState s{c.at("cells").get<int>(), 0};
    for (int x : c.at("frontier").get<std::vector<int>>()) {
      if (x < 0 || x > spec_.rank()) throw std::invalid_argument("frontier color out of range");
      s.frontier |= 1u << x;
    }
    y.columns.push_back(s);
  }
  if (!(normalize(y) == y) || !is_valid(y)) throw std::invalid_argument("payload is not a valid wall");
  return y;
}

std::string WallModel::label(const Wall& y) const {
  std::ostringstream os;
  for (int j = 0; j < static_cast<int>(y.columns.size()); ++j) {
    if (j) os << "\n";
    os << "y" << j << ":";
    for (const auto& b : column_blocks(y.columns[j], j)) os << " " << b.color;
  }
  return os.str();
}

std::vector<Wall> WallModel::enumerate(int max_blocks) const {
  std::vector<Wall> out;
  Wall cur;
  auto blocks = [&](const ColumnState& s, int j) { return static_cast<int>(column_blocks(s, j).size()); };
  auto rec = [&](auto&& self, int used) -> void {
    if (is_valid(cur) && is_reduced(cur)) out.push_back(cur);
    int j = static_cast<int>(cur.columns.size());
    if (j >= max_blocks) return;
    for (int full = 0; full <= max_blocks + 1; ++full) {
      std::vector<unsigned> fronts{0u};
      const auto& c = cell(full);
      if (c.size() == 2) {
        fronts.push_back(1u << c[0]);
        fronts.push_back(1u << c[1]);
      }
      for (unsigned f : fronts) {
        ColumnState s{full, f};
        if (!state_well_formed(s, j) || s == ground(j)) continue;
        int b = blocks(s, j);
        if (used + b > max_blocks) continue;
        cur.columns.push_back(s);
        if (column_supported(cur, j)) self(self, used + b);
        cur.columns.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace qcrystal
