#include "qcrystal/quiver.hpp"

#include <functional>

namespace qcrystal {

Quiver Quiver::make(const CartanSpec& spec) {
  Quiver q;
  int n = spec.rank();
  std::vector<Arrow> omega;
  switch (spec.kind()) {
    case Kind::FinA:
      for (int i = 1; i + 1 <= n - 1; ++i) omega.push_back({i + 1, i});
      break;
    case Kind::FinD:
      for (int i = 1; i + 1 <= n - 1; ++i) omega.push_back({i + 1, i});
      omega.push_back({n, n - 2});
      break;
    case Kind::AffA:
      if (n == 1) {
        omega.push_back({1, 0});
        omega.push_back({0, 1});
      } else {
        for (int i = 0; i <= n; ++i) omega.push_back({i, (i + n) % (n + 1)});
      }
      break;
    case Kind::AffD:
      omega.push_back({2, 0});
      omega.push_back({2, 1});
      for (int i = 2; i + 1 <= n - 1; ++i) omega.push_back({i + 1, i});
      omega.push_back({n, n - 2});
      break;
  }
  for (const auto& a : omega) {
    q.arrows_.push_back(a);
    q.arrows_.push_back({a.in, a.out});
  }
  return q;
}

std::optional<int> Quiver::find(int out, int in) const {
  std::optional<int> found;
  for (int h = 0; h < count(); ++h) {
    if (arrows_[h].out != out || arrows_[h].in != in) continue;
    if (in_omega(h)) return h;
    if (!found) found = h;
  }
  return found;
}

std::vector<Matrix<F5>> all_subspaces_f5(int d) {
  std::vector<Matrix<F5>> out;
  // enumerate reduced echelon forms row by row: k rows, pivot set, free entries
  for (int k = 0; k <= d; ++k) {
    std::vector<int> piv(k);
    std::function<void(int, int)> choose = [&](int idx, int start) {
      if (idx == k) {
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < k; ++r)
          for (int c = piv[r] + 1; c < d; ++c)
            if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({r, c});
        long long total = 1;
        for (size_t f = 0; f < free.size(); ++f) total *= 5;
        for (long long code = 0; code < total; ++code) {
          Matrix<F5> basis(d, k);
          for (int r = 0; r < k; ++r) basis(piv[r], r) = F5(1);
          long long c = code;
          for (auto [r, col] : free) {
            basis(col, r) = F5(c % 5);
            c /= 5;
          }
          out.push_back(basis);
        }
        return;
      }
      for (int p = start; p < d; ++p) {
        piv[idx] = p;
        choose(idx + 1, p + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

namespace {

bool contained(const Matrix<F5>& sub, const Matrix<F5>& span) {
  if (sub.cols() == 0) return true;
  Matrix<F5> both(span.rows(), span.cols() + sub.cols());
  for (int i = 0; i < span.rows(); ++i) {
    for (int j = 0; j < span.cols(); ++j) both(i, j) = span(i, j);
    for (int j = 0; j < sub.cols(); ++j) both(i, span.cols() + j) = sub(i, j);
  }
  return rank(both) == span.cols();
}

}  // namespace

bool brute_force_stable(const QuiverRepT<F5>& r, const Framing<F5>& t) {
  const auto& labels = r.spec.labels();
  std::vector<std::vector<int>> bases;
  std::vector<std::vector<Matrix<F5>>> choices;
  for (int lab : labels) {
    bases.push_back(r.basis_of(lab));
    choices.push_back(all_subspaces_f5(static_cast<int>(bases.back().size())));
  }
  std::vector<size_t> pick(labels.size(), 0);
  while (true) {
    // assemble S as a global column basis
    int cols = 0;
    for (size_t v = 0; v < labels.size(); ++v) cols += choices[v][pick[v]].cols();
    if (cols > 0) {
      Matrix<F5> s(r.dim(), cols);
      int c0 = 0;
      bool killed = true;
      for (size_t v = 0; v < labels.size(); ++v) {
        const auto& m = choices[v][pick[v]];
        for (int j = 0; j < m.cols(); ++j)
          for (int i = 0; i < m.rows(); ++i) s(bases[v][i], c0 + j) = m(i, j);
        auto it = t.find(labels[v]);
        if (it != t.end() && !(it->second * m).zero()) killed = false;
        c0 += m.cols();
      }
      bool invariant = killed;
      for (int h = 0; invariant && h < r.quiver.count(); ++h) invariant = contained(r.x[h] * s, s);
      if (invariant) return false;
    }
    size_t v = 0;
    while (v < labels.size() && ++pick[v] == choices[v].size()) pick[v++] = 0;
    if (v == labels.size()) break;
  }
  return true;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (!(a.spec == b.spec)) throw std::invalid_argument("summands have different Cartan data");
  std::vector<int> deg = a.degree;
  deg.insert(deg.end(), b.degree.begin(), b.degree.end());
  QuiverRep s(a.spec, deg);
  for (int h = 0; h < s.quiver.count(); ++h) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j) s.x[h](i, j) = a.x[h](i, j);
    for (int i = 0; i < b.dim(); ++i)
      for (int j = 0; j < b.dim(); ++j) s.x[h](a.dim() + i, a.dim() + j) = b.x[h](i, j);
  }
  return s;
}

CrossMapSpace solve_cross_maps(const QuiverRep& r1, const QuiverRep& r2, CrossArrows arrows) {
  QuiverRep s = direct_sum(r1, r2);
  CrossMapSpace out;
  for (int u = 0; u < r1.dim(); ++u)
    for (int v = 0; v < r2.dim(); ++v)
      for (int h = 0; h < s.quiver.count(); ++h) {
        if (arrows == CrossArrows::ReverseOnly && Quiver::in_omega(h)) continue;
        const Arrow& a = s.quiver.arrows()[h];
        if (a.out == r1.degree[u] && a.in == r2.degree[v]) out.unknowns.push_back({u, v, h});
      }
  int n = s.dim();
  int m = static_cast<int>(out.unknowns.size());
  QMatrix eq(n * n, m);
  for (int k = 0; k < m; ++k) {
    const auto& uk = out.unknowns[k];
    QMatrix e(n, n);
    e(r1.dim() + uk.dst, uk.src) = 1;
    int h = uk.arrow;
    int hb = Quiver::reverse(h);
    // linear part of psi in the perturbation of arrow h
    QMatrix d = Quiver::in_omega(h) ? e * s.x[hb] - s.x[hb] * e : s.x[hb] * e - e * s.x[hb];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) eq(i * n + j, k) = d(i, j);
  }
  out.basis = nullspace(eq);
  return out;
}

QuiverRep build_string(const CartanSpec& spec, int kp, int k) {
  if (k < kp) return QuiverRep(spec, {});
  std::vector<int> deg;
  int e = spec.rank() + 1;
  for (int r = kp; r <= k; ++r) deg.push_back(spec.kind() == Kind::AffA ? ((r % e) + e) % e : r);
  QuiverRep rep(spec, deg);
  for (int r = 1; r < rep.dim(); ++r) rep.link(r, r - 1, 1);
  return rep;
}

QuiverRep entry_rep_a(const CartanSpec& spec, int entry, int row) {
  if (spec.kind() != Kind::FinA) throw std::invalid_argument("type A entries need a FinA spec");
  if (row < 1 || entry < row || entry > spec.rank()) throw std::invalid_argument("entry out of range for its row");
  return build_string(spec, row, entry - 1);
}

std::string variant_name(EntryVariant v) {
  switch (v) {
    case EntryVariant::Body: return "body";
    case EntryVariant::RowNPlus: return "row-n+";
    case EntryVariant::RowNMinus: return "row-n-";
    case EntryVariant::SpinPlus: return "spin+";
    case EntryVariant::SpinMinus: return "spin-";
  }
  return "?";
}

namespace {

// Degree sequence and links of an entry rep; links are (src, dst, coefficient).
struct Template {
  std::vector<int> deg;
  std::vector<std::tuple<int, int, int>> links;
  int add(int d) {
    deg.push_back(d);
    return static_cast<int>(deg.size()) - 1;
  }
};

// d_from..d_{n-2}, each mapping to the next; returns the last index or -1.
int ascending(Template& t, int from, int n) {
  int prev = -1;
  for (int r = from; r <= n - 2; ++r) {
    int id = t.add(r);
    if (prev >= 0) t.links.push_back({prev, id, 1});
    prev = id;
  }
  return prev;
}

// a_{n-2}..a_to, each mapping to the previous degree; returns the first index or -1.
int descending(Template& t, int to, int n) {
  int first = -1, prev = -1;
  for (int r = n - 2; r >= to; --r) {
    int id = t.add(r);
    if (prev >= 0) t.links.push_back({prev, id, 1});
    if (first < 0) first = id;
    prev = id;
  }
  return first;
}

int spin_terminal(int n, int slot, bool plus) { return plus == ((n - slot) % 2 == 0) ? n : n - 1; }

std::optional<Template> entry_template(const CartanSpec& spec, int letter, int p, EntryVariant v) {
  int n = spec.rank();
  int i = std::abs(letter);
  if (letter == 0 || i > n) return std::nullopt;
  Template t;
  bool spin = v == EntryVariant::SpinPlus || v == EntryVariant::SpinMinus;
  if (spin) {
    if (p < 1 || p > n) return std::nullopt;
    if (letter > 0 || letter == -n) return t;
    int term = spin_terminal(n, p, v == EntryVariant::SpinPlus);
    int last = ascending(t, i, n);
    int c = t.add(term);
    if (last >= 0) t.links.push_back({last, c, 1});
    return t;
  }
  if (v == EntryVariant::RowNPlus) {
    if (letter == n) return t;
    if (letter > 0 || letter == -n) return std::nullopt;
    if (i == n - 1) {
      t.add(n);
      return t;
    }
    int last = ascending(t, i, n);
    t.links.push_back({last, t.add(n), 1});
    return t;
  }
  if (v == EntryVariant::RowNMinus) {
    if (letter == -n) return t;
    if (letter > 0) return std::nullopt;
    int last = ascending(t, i, n);
    int b = t.add(n - 1);
    if (last >= 0) t.links.push_back({last, b, 1});
    return t;
  }
  if (p < 1 || p > n - 1) return std::nullopt;
  if (letter > 0) {
    if (i < p) return std::nullopt;
    for (int r = p; r <= i - 1; ++r) {
      int id = t.add(r);
      if (r > p) t.links.push_back({id, id - 1, 1});
    }
    return t;
  }
  if (i == n) {
    int top = descending(t, p, n);
    int c = t.add(n);
    if (top >= 0) t.links.push_back({c, top, 1});
    return t;
  }
  if (i == n - 1) {
    int top = descending(t, p, n);
    int b = t.add(n - 1);
    int c = t.add(n);
    if (top >= 0) {
      t.links.push_back({b, top, 1});
      t.links.push_back({c, top, 1});
    }
    return t;
  }
  int lo = std::min(i, p), hi = std::max(i, p);
  int last = ascending(t, hi, n);
  int b = t.add(n - 1);
  int c = t.add(n);
  if (last >= 0) {
    t.links.push_back({last, b, -1});
    t.links.push_back({last, c, 1});
  }
  int top = descending(t, lo, n);
  t.links.push_back({b, top, 1});
  t.links.push_back({c, top, 1});
  return t;
}

}  // namespace

std::optional<std::vector<int>> d_entry_dimvec(const CartanSpec& spec, int letter, int row, EntryVariant v) {
  if (spec.kind() != Kind::FinD) throw std::invalid_argument("type D entries need a FinD spec");
  auto t = entry_template(spec, letter, row, v);
  if (!t) return std::nullopt;
  std::vector<int> dv(spec.size(), 0);
  for (int d : t->deg) dv[spec.index(d)] += 1;
  return dv;
}

QuiverRep entry_rep_d(const CartanSpec& spec, int letter, int row, EntryVariant v) {
  if (spec.kind() != Kind::FinD) throw std::invalid_argument("type D entries need a FinD spec");
  auto t = entry_template(spec, letter, row, v);
  if (!t)
    throw std::invalid_argument("illegal entry: letter " + std::to_string(letter) + " in row " + std::to_string(row) +
                                " (" + variant_name(v) + ")");
  QuiverRep rep(spec, t->deg);
  for (auto [src, dst, c] : t->links) rep.link(src, dst, c);
  return rep;
}

json rep_to_json(const QuiverRep& r) {
  json basis = json::array();
  for (int k = 0; k < r.dim(); ++k) basis.push_back({{"id", k}, {"deg", r.degree[k]}});
  json arrows = json::array();
  for (int h = 0; h < r.quiver.count(); ++h) {
    json entries = json::array();
    for (int i = 0; i < r.dim(); ++i)
      for (int j = 0; j < r.dim(); ++j)
        if (!is_zero(r.x[h](i, j))) entries.push_back({i, j, r.x[h](i, j).numerator(), r.x[h](i, j).denominator()});
    if (entries.empty()) continue;
    arrows.push_back({{"from", r.quiver.arrows()[h].out}, {"to", r.quiver.arrows()[h].in}, {"entries", entries}});
  }
  return json{{"basis", basis}, {"arrows", arrows}};
}

}  // namespace qcrystal
