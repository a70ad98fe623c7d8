#include "qcrystal/graph.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace qcrystal {

int NodeData::level() const { return std::accumulate(drop.begin(), drop.end(), 0); }

const NodeData& CrystalGraph::node(const std::string& key) const {
  auto it = nodes.find(key);
  if (it == nodes.end()) throw std::out_of_range("no node with key " + key);
  return it->second;
}

std::map<std::pair<std::string, int>, std::string> CrystalGraph::successor_map() const {
  std::map<std::pair<std::string, int>, std::string> out;
  for (const auto& e : edges) out[{e.src, e.i}] = e.dst;
  return out;
}

std::string Report::summary(size_t max_lines) const {
  std::ostringstream os;
  size_t lines = 0;
  for (const auto& [node, items] : by_node)
    for (const auto& what : items) {
      if (lines++ == max_lines) {
        os << "...\n";
        return os.str();
      }
      os << node << ": " << what << "\n";
    }
  return os.str();
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CRYSTAL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

bool within_depth(const CrystalGraph& g, const NodeData& d, int extra) {
  return !g.depth || d.level() + extra <= *g.depth;
}

}  // namespace

Report validate(const CrystalGraph& g) {
  Report r;
  const CartanSpec& spec = g.spec;
  int n = spec.size();
  auto root_it = g.nodes.find(g.root);
  if (root_it == g.nodes.end()) {
    r.add(g.root, "root missing from node set");
    return r;
  }
  const NodeData& root = root_it->second;
  for (int p = 0; p < n; ++p)
    if (root.eps[p] != 0) r.add(g.root, "root has eps_" + std::to_string(spec.label(p)) + " > 0");
  if (root.level() != 0) r.add(g.root, "root has nonzero drop");

  std::map<std::pair<std::string, int>, int> out_deg, in_deg;
  for (const auto& e : g.edges) {
    ++out_deg[{e.src, e.i}];
    ++in_deg[{e.dst, e.i}];
  }
  auto succ = g.successor_map();

  for (const auto& [key, d] : g.nodes) {
    if (d.model_key != key) r.add(key, "payload normalizes to key " + d.model_key);
    WeightCoords w{g.lambda, d.drop};
    for (int p = 0; p < n; ++p) {
      int i = spec.label(p);
      std::string c = std::to_string(i);
      if (d.eps[p] < 0 || d.phi[p] < 0) r.add(key, "negative string length for color " + c);
      int pr = pairing(spec, w, i);
      if (d.phi[p] - d.eps[p] != pr)
        r.add(key, "phi_" + c + " - eps_" + c + " = " + std::to_string(d.phi[p] - d.eps[p]) + " but pairing is " +
                       std::to_string(pr));
      if (out_deg[{key, i}] > 1) r.add(key, "out-degree > 1 for color " + c);
      if (in_deg[{key, i}] > 1) r.add(key, "in-degree > 1 for color " + c);
      if (d.eps[p] > 0) {
        if (!d.raised[p])
          r.add(key, "eps_" + c + " > 0 but e_" + c + " is undefined");
        else if (!g.nodes.count(*d.raised[p]))
          r.add(key, "e_" + c + " leaves the node set");
        else {
          auto it = succ.find({*d.raised[p], i});
          if (it == succ.end() || it->second != key) r.add(key, "missing incoming edge of color " + c);
        }
      } else if (d.raised[p]) {
        r.add(key, "eps_" + c + " = 0 but e_" + c + " is defined");
      }
      if (within_depth(g, d, 1)) {
        if ((d.phi[p] > 0) != d.lowered[p].has_value()) r.add(key, "phi_" + c + " disagrees with f_" + c);
        auto it = succ.find({key, i});
        if (d.lowered[p] && (it == succ.end() || it->second != *d.lowered[p]))
          r.add(key, "missing outgoing edge of color " + c);
      }
    }
  }

  for (const auto& e : g.edges) {
    auto su = g.nodes.find(e.src);
    auto sv = g.nodes.find(e.dst);
    if (su == g.nodes.end() || sv == g.nodes.end()) {
      r.add(e.dst, "edge endpoint missing");
      continue;
    }
    if (!spec.has_vertex(e.i)) {
      r.add(e.dst, "edge color " + std::to_string(e.i) + " is not a vertex");
      continue;
    }
    const NodeData& u = su->second;
    const NodeData& v = sv->second;
    int p = spec.index(e.i);
    std::string c = std::to_string(e.i);
    std::vector<int> expect = u.drop;
    expect[p] += 1;
    if (v.drop != expect) r.add(e.dst, "drop " + vec_str(v.drop) + " is not parent drop plus alpha_" + c);
    if (v.eps[p] != u.eps[p] + 1) r.add(e.dst, "eps_" + c + " did not increase by one along the edge");
    if (v.phi[p] != u.phi[p] - 1) r.add(e.dst, "phi_" + c + " did not decrease by one along the edge");
    if (!v.raised[p] || *v.raised[p] != e.src) r.add(e.dst, "e_" + c + " f_" + c + " is not the identity");
    if (u.lowered[p] && *u.lowered[p] != e.dst) r.add(e.dst, "edge target differs from f_" + c + " of the source");
  }

  std::set<std::string> seen{g.root};
  std::deque<std::string> queue{g.root};
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : g.edges) adj[e.src].push_back(e.dst);
  while (!queue.empty()) {
    std::string k = queue.front();
    queue.pop_front();
    for (const auto& t : adj[k])
      if (seen.insert(t).second) queue.push_back(t);
  }
  for (const auto& [key, d] : g.nodes)
    if (!seen.count(key)) r.add(key, "unreachable from the root");
  return r;
}

namespace {

// One direction of the Stembridge local axioms; the dual runs with e and f exchanged.
struct LocalView {
  const CrystalGraph* g;
  bool up;
  std::map<std::pair<std::string, int>, std::string> fmap;

  std::optional<std::string> step(const std::string& x, int p) const {
    const NodeData& d = g->node(x);
    if (up) {
      if (!d.raised[p] || !g->nodes.count(*d.raised[p])) return std::nullopt;
      return d.raised[p];
    }
    auto it = fmap.find({x, g->spec.label(p)});
    if (it == fmap.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::string> path(std::string x, std::initializer_list<int> ps) const {
    for (int p : ps) {
      auto y = step(x, p);
      if (!y) return std::nullopt;
      x = *y;
    }
    return x;
  }
  int eps(const std::string& x, int p) const { return up ? g->node(x).eps[p] : g->node(x).phi[p]; }
  int phi(const std::string& x, int p) const { return up ? g->node(x).phi[p] : g->node(x).eps[p]; }
  // Steps in this direction that stay inside the generated window.
  bool room(const std::string& x, int steps) const { return up || within_depth(*g, g->node(x), steps); }
};

void check_local(const LocalView& v, Report& r) {
  const CartanSpec& spec = v.g->spec;
  int n = spec.size();
  std::string dir = v.up ? "e" : "f";
  for (const auto& [x, d] : v.g->nodes) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (p == q) continue;
        int a = spec.matrix()[p][q];
        if (a != 0 && a != -1) continue;
        std::string tag = dir + " colors " + std::to_string(spec.label(p)) + "," + std::to_string(spec.label(q));
        if (!v.room(x, 1)) continue;
        auto xi = v.step(x, p);
        if (!xi) continue;
        int de = v.eps(*xi, q) - v.eps(x, q);
        int dp = v.phi(*xi, q) - v.phi(x, q);
        if (-de + dp != a) r.add(x, "P2 fails for " + tag);
        if (-de > 0 || dp > 0) r.add(x, "P3 fails for " + tag);
        if (p > q) continue;
        auto xj = v.step(x, q);
        if (!xj) continue;
        int de_j = v.eps(*xj, p) - v.eps(x, p);
        if (de == 0 && de_j == 0) {
          if (!v.room(x, 2)) continue;
          auto a1 = v.path(x, {q, p});
          auto a2 = v.path(x, {p, q});
          if (!a1 || !a2 || *a1 != *a2) r.add(x, "P5 fails for " + tag);
        } else if (de == 1 && de_j == 1) {
          if (!v.room(x, 4)) continue;
          auto a1 = v.path(x, {p, q, q, p});
          auto a2 = v.path(x, {q, p, p, q});
          if (!a1 || !a2 || *a1 != *a2) r.add(x, "P6 fails for " + tag);
        }
      }
    }
  }
}

}  // namespace

Report stembridge(const CrystalGraph& g) {
  Report r;
  LocalView up{&g, true, {}};
  LocalView down{&g, false, g.successor_map()};
  check_local(up, r);
  check_local(down, r);
  return r;
}

bool graphs_isomorphic(const CrystalGraph& a, const CrystalGraph& b) {
  if (!(a.spec == b.spec)) throw std::invalid_argument("graphs have different Cartan data");
  if (a.lambda != b.lambda) return false;
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  if (!a.nodes.count(a.root) || !b.nodes.count(b.root)) return false;
  auto sa = a.successor_map();
  auto sb = b.successor_map();
  std::map<std::string, std::string> fwd, bwd;
  std::deque<std::string> queue{a.root};
  fwd[a.root] = b.root;
  bwd[b.root] = a.root;
  while (!queue.empty()) {
    std::string x = queue.front();
    queue.pop_front();
    const std::string& y = fwd[x];
    if (a.node(x).drop != b.node(y).drop) return false;
    for (int lab : a.spec.labels()) {
      auto ia = sa.find({x, lab});
      auto ib = sb.find({y, lab});
      if ((ia == sa.end()) != (ib == sb.end())) return false;
      if (ia == sa.end()) continue;
      auto f = fwd.find(ia->second);
      auto bk = bwd.find(ib->second);
      if (f == fwd.end() && bk == bwd.end()) {
        fwd[ia->second] = ib->second;
        bwd[ib->second] = ia->second;
        queue.push_back(ia->second);
      } else if (f == fwd.end() || bk == bwd.end() || f->second != ib->second) {
        return false;
      }
    }
  }
  return fwd.size() == a.nodes.size();
}

json to_json(const CrystalGraph& g) {
  json spec = {{"kind", kind_name(g.spec.kind())},
               {"rank", g.spec.rank()},
               {"weight", g.lambda},
               {"model", g.model},
               {"depth", g.depth ? json(*g.depth) : json(nullptr)}};
  json nodes = json::array();
  for (const auto& [key, d] : g.nodes)
    nodes.push_back({{"key", key}, {"model", g.model}, {"payload", d.payload}, {"drop", d.drop}});
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"src", e.src}, {"dst", e.dst}, {"i", e.i}});
  return {{"spec", spec}, {"root", g.root}, {"nodes", nodes}, {"edges", edges}};
}

std::string serialize(const CrystalGraph& g) { return to_json(g).dump(1) + "\n"; }

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& [key, d] : g.nodes) os << "  \"" << dot_escape(key) << "\" [label=\"" << dot_escape(d.label) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  \"" << dot_escape(e.src) << "\" -> \"" << dot_escape(e.dst) << "\" [label=\"" << e.i << "\"];\n";
  os << "}\n";
  return os.str();
}

CrystalGraph parse_graph_header(const json& j) {
  CrystalGraph g;
  const json& s = j.at("spec");
  g.spec = CartanSpec::make(parse_kind(s.at("kind").get<std::string>()), s.at("rank").get<int>());
  g.lambda = s.at("weight").get<std::vector<int>>();
  if (static_cast<int>(g.lambda.size()) != g.spec.size()) throw std::invalid_argument("weight has wrong length");
  g.model = s.at("model").get<std::string>();
  if (!s.at("depth").is_null()) g.depth = s.at("depth").get<int>();
  g.root = j.at("root").get<std::string>();
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("src").get<std::string>(), e.at("dst").get<std::string>(), e.at("i").get<int>()});
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace qcrystal
