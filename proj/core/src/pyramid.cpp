#include "qcrystal/pyramid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qcrystal {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

std::string StringDescriptor::class_key(int n) const {
  int e = n + 1;
  int shift = mod(kp, e) - kp;
  return std::to_string(kp + shift) + ":" + std::to_string(k + shift);
}

PyramidModel::PyramidModel(CartanSpec spec, std::vector<int> lambda, PyramidOrder order)
    : spec_(std::move(spec)), lambda_(std::move(lambda)), order_(order) {
  if (spec_.kind() != Kind::AffA) throw std::invalid_argument("pyramids need an AffA spec");
  if (static_cast<int>(lambda_.size()) != spec_.size()) throw std::invalid_argument("weight length mismatch");
  for (int p = 0; p < spec_.size(); ++p) {
    if (lambda_[p] < 0) throw std::invalid_argument("weight is not dominant");
    for (int k = 0; k < lambda_[p]; ++k) charges_.push_back(spec_.label(p));
  }
  if (charges_.empty()) throw std::invalid_argument("pyramids need a weight of positive level");
  for (int s : charges_) offsets_.push_back(charges_.back() - s);
}

int PyramidModel::height(const Pyramid& p, int r, int c) const {
  const auto& row = p.heights.at(r);
  return c >= 0 && c < static_cast<int>(row.size()) ? row[c] : 0;
}

int PyramidModel::block_color(int r, int c, int level) const { return mod(charges_[r] - c + level - 1, colors()); }

bool PyramidModel::is_valid(const Pyramid& p) const {
  int l = level();
  if (static_cast<int>(p.heights.size()) != l) return false;
  for (const auto& row : p.heights) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 0) return false;
      if (c > 0 && row[c] > row[c - 1]) return false;
    }
    if (!row.empty() && row.back() == 0) return false;
  }
  int max_x = 0;
  for (int r = 0; r < l; ++r) max_x = std::max(max_x, static_cast<int>(p.heights[r].size()) + offsets_[r]);
  for (int r = 0; r + 1 < l; ++r)
    for (int x = 0; x <= max_x; ++x) {
      int cn = x - offsets_[r], cs = x - offsets_[r + 1];
      if (cn < 0) continue;
      int a = height(p, r, cn);
      if (cs < 0) {
        if (a > 0) return false;
        continue;
      }
      if (a < height(p, r + 1, cs)) return false;
    }
  return true;
}

bool PyramidModel::is_proper(const Pyramid& p) const {
  if (!is_valid(p)) return false;
  int l = level(), e = colors();
  int max_x = static_cast<int>(p.heights[0].size()) + offsets_[0];
  for (int x = 0; x <= max_x; ++x) {
    int c1 = x - offsets_[0], cl = x - e - offsets_[l - 1];
    if (c1 < 0 || cl < 0) continue;
    if (height(p, 0, c1) > height(p, l - 1, cl)) return false;
  }
  return true;
}

bool PyramidModel::is_n_reduced(const Pyramid& p) const {
  std::map<int, std::set<int>> tops;
  for (int r = 0; r < level(); ++r)
    for (int c = 0; c < static_cast<int>(p.heights[r].size()); ++c) {
      int h = p.heights[r][c];
      if (h > 0) tops[h].insert(block_color(r, c, h));
    }
  for (const auto& [h, s] : tops)
    if (static_cast<int>(s.size()) == colors()) return false;
  return true;
}

std::vector<StackSign> PyramidModel::signature(const Pyramid& p, int i) const {
  spec_.index(i);
  std::vector<StackSign> out;
  for (int r = 0; r < level(); ++r) {
    int s = charges_[r];
    int len = static_cast<int>(p.heights[r].size());
    for (int c = 0; c <= len; ++c) {
      int h = height(p, r, c);
      if (h > 0 && block_color(r, c, h) == i && h > height(p, r, c + 1)) out.push_back({r, c, h, true, s + h - 1 - c});
      if (mod(s - c + h, colors()) == i && (c == 0 || h < height(p, r, c - 1))) out.push_back({r, c, h, false, s + h - c});
    }
  }
  if (order_ == PyramidOrder::Content) {
    std::stable_sort(out.begin(), out.end(), [](const StackSign& a, const StackSign& b) {
      if (a.content != b.content) return a.content > b.content;
      return a.row < b.row;
    });
  } else {
    std::stable_sort(out.begin(), out.end(), [](const StackSign& a, const StackSign& b) {
      if (a.height != b.height) return a.height > b.height;
      if (a.removable != b.removable) return a.removable;
      if (a.col != b.col) return a.col < b.col;
      return a.row < b.row;
    });
  }
  return out;
}

Pyramid PyramidModel::root() const { return Pyramid{std::vector<std::vector<int>>(level())}; }

std::string PyramidModel::key(const Pyramid& p) const {
  std::ostringstream os;
  os << p.heights.size();
  for (const auto& row : p.heights) {
    os << "|" << row.size() << ":";
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
  }
  return os.str();
}

Pyramid PyramidModel::adjust(const Pyramid& p, int r, int c, int dh) const {
  Pyramid q = p;
  auto& row = q.heights[r];
  if (static_cast<int>(row.size()) <= c) row.resize(c + 1, 0);
  row[c] += dh;
  while (!row.empty() && row.back() == 0) row.pop_back();
  return q;
}

namespace {

SignedWord to_word(const std::vector<StackSign>& sig) {
  SignedWord w;
  for (size_t k = 0; k < sig.size(); ++k) w.push_back({static_cast<int>(k), sig[k].removable ? 1 : 0, sig[k].removable ? 0 : 1});
  return w;
}

}  // namespace

std::optional<Pyramid> PyramidModel::apply(const Pyramid& p, int i, Dir dir) const {
  auto sig = signature(p, i);
  auto k = tensor_apply(to_word(sig), dir);
  if (!k) return std::nullopt;
  const StackSign& s = sig[*k];
  return adjust(p, s.row, s.col, dir == Dir::Lower ? 1 : -1);
}

std::pair<int, int> PyramidModel::string_lengths(const Pyramid& p, int i) const {
  auto r = reduce_signature(to_word(signature(p, i)));
  return {r.eps(), r.phi()};
}

std::vector<int> PyramidModel::drop(const Pyramid& p) const {
  std::vector<int> k(spec_.size(), 0);
  for (int r = 0; r < level(); ++r)
    for (int c = 0; c < static_cast<int>(p.heights[r].size()); ++c)
      for (int lev = 1; lev <= p.heights[r][c]; ++lev) k[spec_.index(block_color(r, c, lev))] += 1;
  return k;
}

json PyramidModel::payload(const Pyramid& p) const {
  json cells = json::array();
  for (int r = 0; r < level(); ++r)
    for (int c = 0; c < static_cast<int>(p.heights[r].size()); ++c) cells.push_back({r + 1, c, p.heights[r][c]});
  return json{{"charges", charges_}, {"heights", cells}};
}

Pyramid PyramidModel::from_payload(const json& j) const {
  if (j.at("charges").get<std::vector<int>>() != charges_) throw std::invalid_argument("payload charges do not match");
  Pyramid p = root();
  for (const auto& cell : j.at("heights")) {
    int r = cell.at(0).get<int>() - 1, c = cell.at(1).get<int>(), h = cell.at(2).get<int>();
    if (r < 0 || r >= level() || c < 0) throw std::invalid_argument("pyramid cell out of range");
    auto& row = p.heights[r];
    if (static_cast<int>(row.size()) <= c) row.resize(c + 1, 0);
    row[c] = h;
  }
  for (auto& row : p.heights)
    while (!row.empty() && row.back() == 0) row.pop_back();
  if (!is_proper(p)) throw std::invalid_argument("payload is not a proper pyramid");
  return p;
}

std::string PyramidModel::label(const Pyramid& p) const {
  std::ostringstream os;
  for (int r = 0; r < level(); ++r) {
    if (r) os << "\n";
    os << "[" << charges_[r] << "]";
    for (int h : p.heights[r]) os << " " << h;
  }
  return os.str();
}

StringDescriptor PyramidModel::stack_to_string(const Pyramid& p, int r, int c) const {
  int h = height(p, r, c);
  if (h < 1) throw std::invalid_argument("empty stack has no string");
  int kp = charges_[r] - c;
  return {kp, kp + h - 1};
}

namespace {

void partitions(int max_sum, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int first = 1; first <= std::min(max_sum, max_part); ++first) {
    cur.push_back(first);
    partitions(max_sum - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Pyramid> PyramidModel::enumerate(int depth) const {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(depth, depth, cur, parts);
  std::vector<Pyramid> out;
  std::vector<std::vector<int>> rows;
  auto rec = [&](auto&& self, int used) -> void {
    if (static_cast<int>(rows.size()) == level()) {
      Pyramid p{rows};
      if (is_proper(p) && is_n_reduced(p)) out.push_back(p);
      return;
    }
    for (const auto& q : parts) {
      int s = 0;
      for (int x : q) s += x;
      if (used + s > depth) continue;
      rows.push_back(q);
      self(self, used + s);
      rows.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace qcrystal
