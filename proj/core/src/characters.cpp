#include "qcrystal/characters.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace qcrystal {

namespace {

int height(const DropVector& k) { return std::accumulate(k.begin(), k.end(), 0); }

long long form(const CartanSpec& spec, const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (int i = 0; i < spec.size(); ++i)
    for (int j = 0; j < spec.size(); ++j) s += static_cast<long long>(a[i]) * spec.matrix()[i][j] * b[j];
  return s;
}

// (lambda, beta) for beta in root coordinates
long long pair_lambda(const std::vector<int>& lambda, const std::vector<int>& beta) {
  long long s = 0;
  for (size_t j = 0; j < beta.size(); ++j) s += static_cast<long long>(lambda[j]) * beta[j];
  return s;
}

// Positive roots of the simply-laced finite diagram on the given positions.
std::vector<std::vector<int>> finite_roots(const CartanSpec& spec, const std::vector<int>& positions) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int p : positions) {
    std::vector<int> r(spec.size(), 0);
    r[p] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier)
      for (int p : positions) {
        std::vector<int> e(spec.size(), 0);
        e[p] = 1;
        if (form(spec, r, e) != -1) continue;
        auto s = r;
        s[p] += 1;
        if (seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

void check_weight(const CartanSpec& spec, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != spec.size()) throw std::invalid_argument("weight length mismatch");
  for (int x : lambda)
    if (x < 0) throw std::invalid_argument("weight is not dominant");
}

}  // namespace

long long MultiplicityTable::at(const DropVector& k) const {
  auto it = mult.find(k);
  return it == mult.end() ? 0 : it->second;
}

long long MultiplicityTable::total() const {
  long long s = 0;
  for (const auto& [k, m] : mult) s += m;
  return s;
}

std::vector<PositiveRoot> positive_roots(const CartanSpec& spec, int max_height) {
  std::vector<PositiveRoot> out;
  if (!spec.affine()) {
    std::vector<int> all(spec.size());
    std::iota(all.begin(), all.end(), 0);
    for (auto& r : finite_roots(spec, all))
      if (height(r) <= max_height) out.push_back({r, 1});
    return out;
  }
  std::vector<int> fin;
  for (int p = 0; p < spec.size(); ++p)
    if (spec.label(p) != 0) fin.push_back(p);
  auto roots = finite_roots(spec, fin);
  auto delta = null_root(spec);
  int hd = height(delta);
  for (int m = 0; m * hd <= max_height + hd; ++m) {
    for (const auto& r : roots) {
      std::vector<int> up(spec.size()), down(spec.size());
      for (int k = 0; k < spec.size(); ++k) {
        up[k] = r[k] + m * delta[k];
        down[k] = m * delta[k] - r[k];
      }
      if (height(up) <= max_height) out.push_back({up, 1});
      if (m >= 1 && height(down) <= max_height) out.push_back({down, 1});
    }
    if (m >= 1 && m * hd <= max_height) {
      std::vector<int> im(spec.size());
      for (int k = 0; k < spec.size(); ++k) im[k] = m * delta[k];
      out.push_back({im, spec.rank()});
    }
  }
  return out;
}

long long weyl_dim(const CartanSpec& spec, const std::vector<int>& lambda) {
  if (spec.affine()) throw std::invalid_argument("the Weyl dimension formula needs a finite type");
  check_weight(spec, lambda);
  Rational d(1);
  for (const auto& r : positive_roots(spec, 1 << 20)) {
    long long num = 0, den = 0;
    for (int k = 0; k < spec.size(); ++k) {
      num += static_cast<long long>(lambda[k] + 1) * r.coords[k];
      den += r.coords[k];
    }
    d *= Rational(num, den);
  }
  if (d.denominator() != 1) throw std::logic_error("Weyl dimension is not integral");
  return d.numerator();
}

MultiplicityTable freudenthal(const CartanSpec& spec, const std::vector<int>& lambda, std::optional<int> depth) {
  check_weight(spec, lambda);
  if (spec.affine() && !depth) throw std::invalid_argument("affine tables need a depth");
  MultiplicityTable t{spec, lambda, depth, {}};
  int n = spec.size();
  int max_h = depth ? *depth : 1 << 20;
  // the finite case stops at the first empty level, so the root bound only matters for affine types
  auto roots = positive_roots(spec, spec.affine() ? max_h : 1 << 20);
  DropVector zero(n, 0);
  t.mult[zero] = 1;
  std::vector<DropVector> level{zero};
  for (int h = 1; h <= max_h && !level.empty(); ++h) {
    std::set<DropVector> cand;
    for (const auto& k : level)
      for (int j = 0; j < n; ++j) {
        auto c = k;
        c[j] += 1;
        cand.insert(c);
      }
    std::vector<DropVector> found;
    for (const auto& k : cand) {
      long long denom = 2 * (pair_lambda(lambda, k) + height(k)) - form(spec, k, k);
      long long sum = 0;
      for (const auto& r : roots) {
        long long rr = form(spec, r.coords, r.coords);
        for (int s = 1;; ++s) {
          DropVector up(n);
          bool ok = true;
          for (int j = 0; j < n; ++j) {
            up[j] = k[j] - s * r.coords[j];
            ok &= up[j] >= 0;
          }
          if (!ok) break;
          long long m = t.at(up);
          if (m == 0) continue;
          // (mu + s alpha, alpha) with mu = lambda - k
          long long ip = pair_lambda(lambda, r.coords) - form(spec, k, r.coords) + s * rr;
          sum += r.mult * ip * m;
        }
      }
      sum *= 2;
      if (sum == 0) continue;
      if (denom <= 0 || sum % denom != 0)
        throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
      t.mult[k] = sum / denom;
      found.push_back(k);
    }
    level = std::move(found);
  }
  return t;
}

std::vector<std::string> compare(const CrystalGraph& g, const MultiplicityTable& t) {
  if (!(g.spec == t.spec) || g.lambda != t.lambda) throw std::invalid_argument("graph and table describe different modules");
  if (t.depth && g.depth && *g.depth < *t.depth) throw std::invalid_argument("graph is shallower than the table");
  if (!t.depth && g.depth) throw std::invalid_argument("a complete table needs a complete graph");
  int limit = t.depth ? *t.depth : 1 << 20;
  std::map<DropVector, long long> counts;
  for (const auto& [key, d] : g.nodes)
    if (height(d.drop) <= limit) counts[d.drop] += 1;
  std::set<DropVector> keys;
  for (const auto& [k, m] : counts) keys.insert(k);
  for (const auto& [k, m] : t.mult) keys.insert(k);
  std::vector<std::string> out;
  for (const auto& k : keys) {
    long long a = counts.count(k) ? counts[k] : 0;
    long long b = t.at(k);
    if (a == b) continue;
    std::ostringstream os;
    os << "drop [";
    for (size_t j = 0; j < k.size(); ++j) os << (j ? "," : "") << k[j];
    os << "]: crystal " << a << ", oracle " << b;
    out.push_back(os.str());
  }
  return out;
}

json table_to_json(const MultiplicityTable& t) {
  std::vector<std::pair<DropVector, long long>> rows(t.mult.begin(), t.mult.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    int ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  json entries = json::array();
  for (const auto& [k, m] : rows) entries.push_back({{"drop", k}, {"height", height(k)}, {"mult", m}});
  json spec{{"kind", kind_name(t.spec.kind())}, {"rank", t.spec.rank()}, {"weight", t.lambda}};
  spec["depth"] = t.depth ? json(*t.depth) : json(nullptr);
  return json{{"spec", spec}, {"entries", entries}};
}

}  // namespace qcrystal
