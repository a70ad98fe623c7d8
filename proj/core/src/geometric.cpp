#include "qcrystal/geometric.hpp"

#include <algorithm>
#include <cstdlib>

namespace qcrystal {

std::vector<QuiverRep> tableau_reps(const CartanSpec& spec, const Tableau& t) {
  std::vector<QuiverRep> out;
  for (auto b : far_eastern_order(t)) out.push_back(entry_rep_a(spec, t.rows[b.row][b.col], b.row + 1));
  return out;
}

EntryVariant d_body_variant(const DShape& shape, int row) {
  int n = static_cast<int>(shape.lambdas.size());
  if (row < n) return EntryVariant::Body;
  return shape.sign > 0 ? EntryVariant::RowNPlus : EntryVariant::RowNMinus;
}

std::vector<DFactor> d_factors(const TableauDModel& model, const DTableau& t) {
  std::vector<DFactor> out;
  for (auto b : model.reading(t)) {
    if (b.row >= 0) {
      out.push_back({b, t.rows[b.row][b.col], b.row + 1, d_body_variant(model.shape(), b.row + 1)});
      continue;
    }
    EntryVariant v = t.spin->sign > 0 ? EntryVariant::SpinPlus : EntryVariant::SpinMinus;
    for (size_t k = 0; k < t.spin->letters.size(); ++k)
      out.push_back({{-1, static_cast<int>(k)}, t.spin->letters[k], static_cast<int>(k) + 1, v});
  }
  return out;
}

std::vector<QuiverRep> d_tableau_reps(const TableauDModel& model, const DTableau& t) {
  std::vector<QuiverRep> out;
  for (const auto& f : d_factors(model, t)) out.push_back(entry_rep_d(model.spec(), f.letter, f.row, f.variant));
  return out;
}

std::vector<QuiverRep> pyramid_reps(const PyramidModel& model, const Pyramid& p) {
  std::vector<QuiverRep> out;
  for (int r = 0; r < model.level(); ++r)
    for (int c = 0; c < static_cast<int>(p.heights[r].size()); ++c) {
      if (p.heights[r][c] == 0) continue;
      auto d = model.stack_to_string(p, r, c);
      out.push_back(build_string(model.spec(), d.kp, d.k));
    }
  return out;
}

QuiverRep column_rep(const WallModel& model, const ColumnState& s, int j) {
  auto blocks = model.column_blocks(s, j);
  std::vector<int> deg;
  for (const auto& b : blocks) deg.push_back(b.color);
  QuiverRep rep(model.spec(), deg);
  for (size_t u = 0; u < blocks.size(); ++u) {
    std::vector<size_t> below;
    for (size_t v = 0; v < blocks.size(); ++v)
      if (blocks[v].cell == blocks[u].cell - 1) below.push_back(v);
    if (below.size() == 1) {
      rep.link(static_cast<int>(u), static_cast<int>(below[0]), 1);
    } else if (below.size() == 2) {
      size_t lo = blocks[below[0]].color < blocks[below[1]].color ? below[0] : below[1];
      size_t hi = lo == below[0] ? below[1] : below[0];
      rep.link(static_cast<int>(u), static_cast<int>(lo), -1);
      rep.link(static_cast<int>(u), static_cast<int>(hi), 1);
    }
  }
  return rep;
}

QuiverRep column_to_rep(const WallModel& model, const Wall& y, int j) {
  if (j < 0 || j >= static_cast<int>(y.columns.size()) || model.column_blocks(y, j).empty())
    throw std::invalid_argument("column is empty");
  return column_rep(model, y.columns[j], j);
}

std::vector<int> geometric_drop(const CartanSpec& spec, const std::vector<QuiverRep>& reps) {
  std::vector<int> v(spec.size(), 0);
  for (const auto& r : reps) {
    auto d = r.dimension_vector();
    for (int k = 0; k < spec.size(); ++k) v[k] += d[k];
  }
  return v;
}

int geometric_epsilon(const TableauAModel& model, const Tableau& t, int i) {
  model.spec().index(i);
  // strings V(q, i) in row q can receive a generic map from V(p, i-1) with p < q
  int pool = 0, unmatched = 0;
  for (size_t r = 0; r < t.rows.size(); ++r) {
    int ends_i = 0, ends_before = 0;
    for (int e : t.rows[r]) {
      ends_i += e == i + 1 && i + 1 > static_cast<int>(r) + 1;
      ends_before += e == i;
    }
    int m = std::min(pool, ends_i);
    pool -= m;
    unmatched += ends_i - m;
    pool += ends_before;
  }
  return unmatched;
}

int geometric_epsilon(const StringModelA& model, const StringElement& s, int i) {
  return geometric_epsilon(TableauAModel(model.spec(), model.lambda()), tableau_of(s), i);
}

namespace {

bool legal(const CartanSpec& spec, DLetter x, int row, EntryVariant v) {
  return d_entry_dimvec(spec, x, row, v).has_value();
}

// Matches admissible (+) before removable (-) along the word; returns unmatched removables.
int match(const std::vector<std::pair<int, int>>& signs) {
  int open = 0, unmatched = 0;
  for (auto [minus, plus] : signs) {
    int m = std::min(open, minus);
    open -= m;
    unmatched += minus - m;
    open += plus;
  }
  return unmatched;
}

}  // namespace

int geometric_epsilon(const TableauDModel& model, const DTableau& t, int i) {
  const CartanSpec& spec = model.spec();
  int n = spec.rank();
  int pos = spec.index(i);
  std::vector<std::pair<int, int>> signs;
  std::vector<int> spin_dim(spec.size(), 0);
  for (const auto& f : d_factors(model, t)) {
    auto d = d_entry_dimvec(spec, f.letter, f.row, f.variant);
    if (!d) throw std::logic_error("tableau contains an illegal entry");
    if (f.box.row < 0) {
      for (int k = 0; k < spec.size(); ++k) spin_dim[k] += (*d)[k];
      continue;
    }
    auto up = vector_crystal_step(f.letter, i, Dir::Raise, n);
    auto down = vector_crystal_step(f.letter, i, Dir::Lower, n);
    int removable = up && (*d)[pos] > 0 && legal(spec, *up, f.row, f.variant);
    int admissible = down && legal(spec, *down, f.row, f.variant);
    signs.push_back({removable, admissible});
  }
  if (t.spin) {
    int removable = spin_step(*t.spin, i, Dir::Raise, n) && spin_dim[pos] > 0;
    int admissible = spin_step(*t.spin, i, Dir::Lower, n).has_value();
    signs.push_back({removable, admissible});
  }
  return match(signs);
}

int geometric_epsilon(const PyramidModel& model, const Pyramid& p, int i) {
  model.spec().index(i);
  int e = model.colors();
  // endpoints of strings that can shrink at color i, and of slots whose string can grow into color i
  struct End {
    int end;
    int row;
    bool removable;
  };
  std::vector<End> ends;
  for (int r = 0; r < model.level(); ++r) {
    int len = static_cast<int>(p.heights[r].size());
    for (int c = 0; c <= len; ++c) {
      int h = model.height(p, r, c);
      int kp = model.charges()[r] - c;
      if (h > 0) {
        auto s = model.stack_to_string(p, r, c);
        if (((s.k % e) + e) % e == i && h > model.height(p, r, c + 1)) ends.push_back({s.k, r, true});
      }
      int next = kp + h;
      if (((next % e) + e) % e == i && (c == 0 || h < model.height(p, r, c - 1))) ends.push_back({next, r, false});
    }
  }
  std::stable_sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
    if (a.end != b.end) return a.end > b.end;
    return a.row < b.row;
  });
  std::vector<std::pair<int, int>> signs;
  for (const auto& x : ends) signs.push_back({x.removable ? 1 : 0, x.removable ? 0 : 1});
  return match(signs);
}

}  // namespace qcrystal
