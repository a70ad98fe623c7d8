#pragma once

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace qcrystal {

using Rational = boost::rational<long long>;

enum class Kind { FinA, FinD, AffA, AffD };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

// Vertex labels: FinA 1..n-1, FinD 1..n, AffA 0..n, AffD 0..n.
// Internally every per-vertex vector is indexed by position 0..size()-1.
class CartanSpec {
 public:
  static CartanSpec make(Kind kind, int rank);

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  bool affine() const { return kind_ == Kind::AffA || kind_ == Kind::AffD; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int label(int pos) const { return labels_.at(pos); }
  int index(int vertex) const;
  bool has_vertex(int vertex) const;
  // a_{ij} by vertex label
  int a(int i, int j) const { return cartan_[index(i)][index(j)]; }
  const std::vector<std::vector<int>>& matrix() const { return cartan_; }
  bool adjacent(int i, int j) const { return i != j && a(i, j) != 0; }

  bool operator==(const CartanSpec& o) const { return kind_ == o.kind_ && rank_ == o.rank_; }

 private:
  Kind kind_ = Kind::FinA;
  int rank_ = 0;
  std::vector<int> labels_;
  std::vector<std::vector<int>> cartan_;
};

struct WeightCoords {
  std::vector<int> lambda;
  std::vector<int> drop;
};

struct EpsWeight {
  std::vector<Rational> coeffs;
  bool operator==(const EpsWeight& o) const { return coeffs == o.coeffs; }
};

std::string to_string(const Rational& r);
std::string to_string(const EpsWeight& w);

WeightCoords make_weight(const CartanSpec& spec, std::vector<int> lambda, std::vector<int> drop = {});

int pairing(const CartanSpec& spec, const WeightCoords& w, int i);
std::vector<int> pairings(const CartanSpec& spec, const WeightCoords& w);

EpsWeight eps_convert(const CartanSpec& spec, const WeightCoords& w);
// <h_i, mu> for each vertex, from epsilon coordinates
std::vector<int> from_eps(const CartanSpec& spec, const EpsWeight& w);
EpsWeight eps_of_root(const CartanSpec& spec, int i);
// Simple-root coefficients of beta given in epsilon coordinates; throws unless integral.
std::vector<int> root_coords(const CartanSpec& spec, const EpsWeight& beta);
// Drop vector of an element whose weight is wt, inside B(lambda).
std::vector<int> drop_from_eps(const CartanSpec& spec, const std::vector<int>& lambda, const EpsWeight& wt);

std::vector<int> null_root(const CartanSpec& spec);

}  // namespace qcrystal
