#include "qcrystal/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcrystal {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::FinA: return "FinA";
    case Kind::FinD: return "FinD";
    case Kind::AffA: return "AffA";
    case Kind::AffD: return "AffD";
  }
  return "?";
}

Kind parse_kind(const std::string& s) {
  if (s == "FinA") return Kind::FinA;
  if (s == "FinD") return Kind::FinD;
  if (s == "AffA") return Kind::AffA;
  if (s == "AffD") return Kind::AffD;
  throw std::invalid_argument("unknown algebra kind: " + s);
}

CartanSpec CartanSpec::make(Kind kind, int rank) {
  CartanSpec s;
  s.kind_ = kind;
  s.rank_ = rank;
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case Kind::FinA:
      if (rank < 2) throw std::invalid_argument("FinA needs rank >= 2");
      for (int i = 1; i <= rank - 1; ++i) s.labels_.push_back(i);
      for (int i = 1; i + 1 <= rank - 1; ++i) edges.push_back({i, i + 1});
      break;
    case Kind::FinD:
      if (rank < 4) throw std::invalid_argument("FinD needs rank >= 4");
      for (int i = 1; i <= rank; ++i) s.labels_.push_back(i);
      for (int i = 1; i <= rank - 2; ++i) edges.push_back({i, i + 1});
      edges.push_back({rank - 2, rank});
      break;
    case Kind::AffA:
      if (rank < 1) throw std::invalid_argument("AffA needs rank >= 1");
      for (int i = 0; i <= rank; ++i) s.labels_.push_back(i);
      if (rank == 1) {
        edges.push_back({0, 1});
        edges.push_back({0, 1});
      } else {
        for (int i = 0; i <= rank; ++i) edges.push_back({i, (i + 1) % (rank + 1)});
      }
      break;
    case Kind::AffD:
      if (rank < 4) throw std::invalid_argument("AffD needs rank >= 4");
      for (int i = 0; i <= rank; ++i) s.labels_.push_back(i);
      edges.push_back({0, 2});
      edges.push_back({1, 2});
      for (int i = 2; i <= rank - 2; ++i) edges.push_back({i, i + 1});
      edges.push_back({rank - 2, rank});
      break;
  }
  int m = s.size();
  s.cartan_.assign(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) s.cartan_[i][i] = 2;
  for (auto [a, b] : edges) {
    int ia = s.index(a), ib = s.index(b);
    s.cartan_[ia][ib] -= 1;
    s.cartan_[ib][ia] -= 1;
  }
  return s;
}

int CartanSpec::index(int vertex) const {
  auto it = std::find(labels_.begin(), labels_.end(), vertex);
  if (it == labels_.end()) throw std::out_of_range("unknown vertex " + std::to_string(vertex));
  return static_cast<int>(it - labels_.begin());
}

bool CartanSpec::has_vertex(int vertex) const {
  return std::find(labels_.begin(), labels_.end(), vertex) != labels_.end();
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const EpsWeight& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.coeffs.size(); ++i) os << (i ? "," : "") << to_string(w.coeffs[i]);
  os << ")";
  return os.str();
}

WeightCoords make_weight(const CartanSpec& spec, std::vector<int> lambda, std::vector<int> drop) {
  if (static_cast<int>(lambda.size()) != spec.size())
    throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " coefficients, expected " +
                                std::to_string(spec.size()));
  if (drop.empty()) drop.assign(spec.size(), 0);
  if (static_cast<int>(drop.size()) != spec.size()) throw std::invalid_argument("drop vector length mismatch");
  for (int k : drop)
    if (k < 0) throw std::invalid_argument("negative drop entry");
  return {std::move(lambda), std::move(drop)};
}

int pairing(const CartanSpec& spec, const WeightCoords& w, int i) {
  int p = spec.index(i);
  int v = w.lambda.at(p);
  for (int j = 0; j < spec.size(); ++j) v -= w.drop.at(j) * spec.matrix()[p][j];
  return v;
}

std::vector<int> pairings(const CartanSpec& spec, const WeightCoords& w) {
  std::vector<int> out;
  for (int lab : spec.labels()) out.push_back(pairing(spec, w, lab));
  return out;
}

namespace {

void require_finite(const CartanSpec& spec) {
  if (spec.affine()) throw std::invalid_argument("epsilon coordinates exist only for finite types");
}

EpsWeight fundamental(const CartanSpec& spec, int i) {
  int n = spec.rank();
  EpsWeight w{std::vector<Rational>(n, Rational(0))};
  if (spec.kind() == Kind::FinA) {
    for (int k = 0; k < i; ++k) w.coeffs[k] = 1;
    return w;
  }
  if (i <= n - 2) {
    for (int k = 0; k < i; ++k) w.coeffs[k] = 1;
  } else {
    for (int k = 0; k < n; ++k) w.coeffs[k] = Rational(1, 2);
    if (i == n - 1) w.coeffs[n - 1] = Rational(-1, 2);
  }
  return w;
}

}  // namespace

EpsWeight eps_of_root(const CartanSpec& spec, int i) {
  require_finite(spec);
  spec.index(i);
  int n = spec.rank();
  EpsWeight w{std::vector<Rational>(n, Rational(0))};
  if (spec.kind() == Kind::FinD && i == n) {
    w.coeffs[n - 2] = 1;
    w.coeffs[n - 1] = 1;
  } else {
    w.coeffs[i - 1] = 1;
    w.coeffs[i] = -1;
  }
  return w;
}

EpsWeight eps_convert(const CartanSpec& spec, const WeightCoords& w) {
  require_finite(spec);
  int n = spec.rank();
  EpsWeight out{std::vector<Rational>(n, Rational(0))};
  for (int p = 0; p < spec.size(); ++p) {
    int lab = spec.label(p);
    EpsWeight f = fundamental(spec, lab);
    EpsWeight r = eps_of_root(spec, lab);
    for (int k = 0; k < n; ++k) out.coeffs[k] += f.coeffs[k] * w.lambda.at(p) - r.coeffs[k] * w.drop.at(p);
  }
  return out;
}

std::vector<int> from_eps(const CartanSpec& spec, const EpsWeight& w) {
  require_finite(spec);
  int n = spec.rank();
  if (static_cast<int>(w.coeffs.size()) != n) throw std::invalid_argument("epsilon vector length mismatch");
  std::vector<int> out;
  for (int lab : spec.labels()) {
    Rational v = (spec.kind() == Kind::FinD && lab == n) ? w.coeffs[n - 2] + w.coeffs[n - 1]
                                                          : w.coeffs[lab - 1] - w.coeffs[lab];
    if (v.denominator() != 1) throw std::invalid_argument("not an integral weight");
    out.push_back(static_cast<int>(v.numerator()));
  }
  return out;
}

std::vector<int> root_coords(const CartanSpec& spec, const EpsWeight& beta) {
  require_finite(spec);
  int n = spec.rank();
  if (static_cast<int>(beta.coeffs.size()) != n) throw std::invalid_argument("epsilon vector length mismatch");
  std::vector<Rational> partial(n);
  Rational acc = 0;
  for (int m = 0; m < n; ++m) partial[m] = acc += beta.coeffs[m];
  std::vector<Rational> k;
  if (spec.kind() == Kind::FinA) {
    if (partial[n - 1] != Rational(0)) throw std::invalid_argument("not in the root lattice");
    for (int i = 1; i <= n - 1; ++i) k.push_back(partial[i - 1]);
  } else {
    for (int i = 1; i <= n - 2; ++i) k.push_back(partial[i - 1]);
    k.push_back((partial[n - 2] - beta.coeffs[n - 1]) / 2);
    k.push_back((partial[n - 2] + beta.coeffs[n - 1]) / 2);
  }
  std::vector<int> out;
  for (const auto& x : k) {
    if (x.denominator() != 1) throw std::invalid_argument("not in the root lattice");
    out.push_back(static_cast<int>(x.numerator()));
  }
  return out;
}

std::vector<int> drop_from_eps(const CartanSpec& spec, const std::vector<int>& lambda, const EpsWeight& wt) {
  EpsWeight top = eps_convert(spec, make_weight(spec, lambda));
  EpsWeight beta{top.coeffs};
  for (size_t m = 0; m < beta.coeffs.size(); ++m) beta.coeffs[m] -= wt.coeffs.at(m);
  auto k = root_coords(spec, beta);
  for (int x : k)
    if (x < 0) throw std::invalid_argument("weight lies above the highest weight");
  return k;
}

std::vector<int> null_root(const CartanSpec& spec) {
  if (!spec.affine()) throw std::invalid_argument("null root exists only for affine types");
  int n = spec.rank();
  if (spec.kind() == Kind::AffA) return std::vector<int>(n + 1, 1);
  std::vector<int> d(n + 1, 2);
  d[0] = d[1] = d[n - 1] = d[n] = 1;
  return d;
}

}  // namespace qcrystal
