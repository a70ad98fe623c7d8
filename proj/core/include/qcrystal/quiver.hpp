#pragma once

#include "qcrystal/graph.hpp"
#include "qcrystal/linalg.hpp"

#include <map>

namespace qcrystal {

struct Arrow {
  int out = 0;
  int in = 0;
};

// Doubled quiver: arrow 2e is the oriented edge e, arrow 2e+1 its reverse.
class Quiver {
 public:
  static Quiver make(const CartanSpec& spec);
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int count() const { return static_cast<int>(arrows_.size()); }
  static bool in_omega(int id) { return id % 2 == 0; }
  static int reverse(int id) { return id ^ 1; }
  static int sign(int id) { return in_omega(id) ? 1 : -1; }
  std::optional<int> find(int out, int in) const;  // prefers the oriented edge

 private:
  std::vector<Arrow> arrows_;
};

// Graded representation with one global matrix per arrow; x[h](dst, src).
template <class T>
struct QuiverRepT {
  CartanSpec spec;
  Quiver quiver;
  std::vector<int> degree;
  std::vector<Matrix<T>> x;

  QuiverRepT() = default;
  QuiverRepT(CartanSpec s, std::vector<int> degrees) : spec(std::move(s)), quiver(Quiver::make(spec)), degree(std::move(degrees)) {
    for (int d : degree) spec.index(d);
    x.assign(quiver.count(), Matrix<T>(dim(), dim()));
  }
  int dim() const { return static_cast<int>(degree.size()); }
  std::vector<int> basis_of(int vertex) const {
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
      if (degree[k] == vertex) out.push_back(k);
    return out;
  }
  std::vector<int> dimension_vector() const {
    std::vector<int> v(spec.size(), 0);
    for (int d : degree) v[spec.index(d)] += 1;
    return v;
  }
  void set(int arrow, int src, int dst, T c) {
    const Arrow& a = quiver.arrows().at(arrow);
    if (degree.at(src) != a.out || degree.at(dst) != a.in) throw std::invalid_argument("arrow does not match degrees");
    x[arrow](dst, src) = c;
  }
  // Map between basis elements along the arrow joining their degrees.
  void link(int src, int dst, T c) {
    auto h = quiver.find(degree.at(src), degree.at(dst));
    if (!h) throw std::invalid_argument("no arrow between these degrees");
    set(*h, src, dst, c);
  }
};

using QuiverRep = QuiverRepT<Rational>;

template <class T>
Matrix<T> restrict_block(const Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix<T> out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) out(static_cast<int>(r), static_cast<int>(c)) = m(rows[r], cols[c]);
  return out;
}

template <class T>
Matrix<T> moment_map_global(const QuiverRepT<T>& r) {
  Matrix<T> psi(r.dim(), r.dim());
  for (int h = 0; h < r.quiver.count(); h += 2) {
    psi = psi + r.x[h] * r.x[h + 1];
    psi = psi - r.x[h + 1] * r.x[h];
  }
  return psi;
}

// psi_i for each vertex, in vertex order.
template <class T>
std::vector<Matrix<T>> moment_map(const QuiverRepT<T>& r) {
  Matrix<T> psi = moment_map_global(r);
  std::vector<Matrix<T>> out;
  for (int lab : r.spec.labels()) {
    auto b = r.basis_of(lab);
    out.push_back(restrict_block(psi, b, b));
  }
  return out;
}

template <class T>
bool moment_map_zero(const QuiverRepT<T>& r) {
  return moment_map_global(r).zero();
}

// Column basis of the span of the columns of m.
template <class T>
Matrix<T> column_span(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  int rk = static_cast<int>(rref(t).size());
  Matrix<T> out(m.rows(), rk);
  for (int c = 0; c < rk; ++c)
    for (int i = 0; i < m.rows(); ++i) out(i, c) = t(c, i);
  return out;
}

template <class T>
bool is_nilpotent(const QuiverRepT<T>& r) {
  Matrix<T> w = Matrix<T>::identity(r.dim());
  for (int step = 0; step <= r.dim(); ++step) {
    if (w.cols() == 0) return true;
    Matrix<T> next(r.dim(), w.cols() * r.quiver.count());
    for (int h = 0; h < r.quiver.count(); ++h) {
      Matrix<T> img = r.x[h] * w;
      for (int i = 0; i < img.rows(); ++i)
        for (int j = 0; j < img.cols(); ++j) next(i, h * w.cols() + j) = img(i, j);
    }
    w = column_span(next);
  }
  return w.cols() == 0;
}

// Framing t_i : V_i -> W_i, keyed by vertex; columns follow basis_of(i).
template <class T>
using Framing = std::map<int, Matrix<T>>;

// Kernel criterion; equals the subspace definition when r is nilpotent.
template <class T>
bool is_stable(const QuiverRepT<T>& r, const Framing<T>& t) {
  for (const auto& [v, m] : t) {
    if (!r.spec.has_vertex(v)) throw std::invalid_argument("framing at unknown vertex");
    if (m.cols() != static_cast<int>(r.basis_of(v).size())) throw std::invalid_argument("framing dimension mismatch");
  }
  for (int lab : r.spec.labels()) {
    auto b = r.basis_of(lab);
    if (b.empty()) continue;
    std::vector<Matrix<T>> parts;
    int total = 0;
    for (int h = 0; h < r.quiver.count(); ++h) {
      if (r.quiver.arrows()[h].out != lab) continue;
      std::vector<int> all(r.dim());
      for (int k = 0; k < r.dim(); ++k) all[k] = k;
      parts.push_back(restrict_block(r.x[h], all, b));
      total += r.dim();
    }
    auto it = t.find(lab);
    if (it != t.end()) {
      parts.push_back(it->second);
      total += it->second.rows();
    }
    Matrix<T> stacked(total, static_cast<int>(b.size()));
    int row = 0;
    for (const auto& p : parts)
      for (int i = 0; i < p.rows(); ++i, ++row)
        for (int j = 0; j < p.cols(); ++j) stacked(row, j) = p(i, j);
    if (rank(stacked) != static_cast<int>(b.size())) return false;
  }
  return true;
}

// Every subspace of F5^d, each as a d x k column basis.
std::vector<Matrix<F5>> all_subspaces_f5(int d);

// Stability by searching all graded subspaces for an x-stable one inside ker t.
bool brute_force_stable(const QuiverRepT<F5>& r, const Framing<F5>& t);

enum class CrossArrows { All, ReverseOnly };

struct CrossUnknown {
  int src = 0;  // basis index in the first summand
  int dst = 0;  // basis index in the second summand
  int arrow = 0;
};

struct CrossMapSpace {
  std::vector<CrossUnknown> unknowns;
  std::vector<std::vector<Rational>> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);
CrossMapSpace solve_cross_maps(const QuiverRep& r1, const QuiverRep& r2, CrossArrows arrows = CrossArrows::All);

// Chain with degrees kp..k (mod n+1 for affine A), e_r -> e_{r-1}.
QuiverRep build_string(const CartanSpec& spec, int kp, int k);
QuiverRep entry_rep_a(const CartanSpec& spec, int entry, int row);

enum class EntryVariant { Body, RowNPlus, RowNMinus, SpinPlus, SpinMinus };

std::string variant_name(EntryVariant v);
// Root coordinates of the entry's defect weight, or nullopt if the pair is illegal.
std::optional<std::vector<int>> d_entry_dimvec(const CartanSpec& spec, int letter, int row, EntryVariant v);
QuiverRep entry_rep_d(const CartanSpec& spec, int letter, int row, EntryVariant v);

json rep_to_json(const QuiverRep& r);

}  // namespace qcrystal
