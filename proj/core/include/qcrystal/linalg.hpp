#pragma once

#include "qcrystal/lattice.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace qcrystal {

// Prime field F_5, used for exhaustive subspace searches.
struct F5 {
  std::uint8_t v = 0;
  F5() = default;
  F5(long long x) : v(static_cast<std::uint8_t>(((x % 5) + 5) % 5)) {}
  friend F5 operator+(F5 a, F5 b) { return F5(a.v + b.v); }
  friend F5 operator-(F5 a, F5 b) { return F5(a.v + 5 - b.v); }
  friend F5 operator*(F5 a, F5 b) { return F5(a.v * b.v); }
  friend F5 operator/(F5 a, F5 b) {
    if (b.v == 0) throw std::domain_error("division by zero in F5");
    static const int inv[5] = {0, 1, 3, 2, 4};
    return F5(a.v * inv[b.v]);
  }
  F5 operator-() const { return F5(5 - v); }
  F5& operator+=(F5 o) { return *this = *this + o; }
  F5& operator-=(F5 o) { return *this = *this - o; }
  bool operator==(const F5& o) const { return v == o.v; }
  bool operator!=(const F5& o) const { return v != o.v; }
};

inline std::ostream& operator<<(std::ostream& os, F5 x) { return os << int(x.v); }

template <class T>
bool is_zero(const T& x) {
  return x == T(0);
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  bool zero() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m = a;
    for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m = a;
    for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int k = r; k < m.rows(); ++k)
      if (!is_zero(m(k, c))) {
        p = k;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int k = 0; k < m.rows(); ++k) {
      if (k == r || is_zero(m(k, c))) continue;
      T f = m(k, c);
      for (int j = 0; j < m.cols(); ++j) m(k, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qcrystal
