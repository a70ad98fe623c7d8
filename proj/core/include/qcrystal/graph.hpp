#pragma once

#include "qcrystal/lattice.hpp"
#include "qcrystal/signature.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <concepts>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace qcrystal {

using json = nlohmann::json;

template <class M>
concept CrystalModel = requires(const M& m, const typename M::Element& x, const json& j, int i) {
  { m.spec() } -> std::convertible_to<const CartanSpec&>;
  { m.lambda() } -> std::convertible_to<const std::vector<int>&>;
  { m.name() } -> std::convertible_to<std::string>;
  { m.root() } -> std::same_as<typename M::Element>;
  { m.key(x) } -> std::convertible_to<std::string>;
  { m.apply(x, i, Dir::Lower) } -> std::same_as<std::optional<typename M::Element>>;
  { m.string_lengths(x, i) } -> std::same_as<std::pair<int, int>>;
  { m.drop(x) } -> std::same_as<std::vector<int>>;
  { m.payload(x) } -> std::same_as<json>;
  { m.from_payload(j) } -> std::same_as<typename M::Element>;
  { m.label(x) } -> std::convertible_to<std::string>;
};

// Per-vertex vectors are indexed by vertex position in the spec.
struct NodeData {
  std::string key;
  std::string model_key;  // key recomputed from the payload
  json payload;
  std::string label;
  std::vector<int> drop;
  std::vector<int> eps;
  std::vector<int> phi;
  std::vector<std::optional<std::string>> raised;
  std::vector<std::optional<std::string>> lowered;
  int level() const;
};

struct Edge {
  std::string src;
  std::string dst;
  int i = 0;
  auto operator<=>(const Edge&) const = default;
};

struct CrystalGraph {
  CartanSpec spec;
  std::vector<int> lambda;
  std::string model;
  std::optional<int> depth;
  std::string root;
  std::map<std::string, NodeData> nodes;
  std::vector<Edge> edges;

  const NodeData& node(const std::string& key) const;
  // (src, color) -> dst
  std::map<std::pair<std::string, int>, std::string> successor_map() const;
};

// Violations grouped by the node they are attributed to.
struct Report {
  std::map<std::string, std::vector<std::string>> by_node;
  void add(const std::string& node, std::string what) { by_node[node].push_back(std::move(what)); }
  bool ok() const { return by_node.empty(); }
  size_t size() const { return by_node.size(); }
  std::string summary(size_t max_lines = 20) const;
};

int thread_count(int requested);

Report validate(const CrystalGraph& g);
Report stembridge(const CrystalGraph& g);
bool graphs_isomorphic(const CrystalGraph& a, const CrystalGraph& b);

json to_json(const CrystalGraph& g);
std::string to_dot(const CrystalGraph& g);
std::string serialize(const CrystalGraph& g);
// Structural fields only; per-node statistics are filled by rehydrate.
CrystalGraph parse_graph_header(const json& j);

namespace detail {

template <CrystalModel M>
NodeData make_node(const M& model, const typename M::Element& x) {
  const CartanSpec& spec = model.spec();
  NodeData d;
  d.key = model.key(x);
  d.model_key = d.key;
  d.payload = model.payload(x);
  d.label = model.label(x);
  d.drop = model.drop(x);
  for (int lab : spec.labels()) {
    auto [e, p] = model.string_lengths(x, lab);
    d.eps.push_back(e);
    d.phi.push_back(p);
    auto up = model.apply(x, lab, Dir::Raise);
    d.raised.push_back(up ? std::optional<std::string>(model.key(*up)) : std::nullopt);
    auto down = model.apply(x, lab, Dir::Lower);
    d.lowered.push_back(down ? std::optional<std::string>(model.key(*down)) : std::nullopt);
  }
  return d;
}

template <class F>
void parallel_for(size_t count, int threads, F&& fn) {
  size_t t = std::min<size_t>(static_cast<size_t>(std::max(threads, 1)), std::max<size_t>(count, 1));
  if (t <= 1) {
    for (size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(t);
  for (size_t w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (size_t k = w; k < count; k += t) fn(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

template <CrystalModel M>
CrystalGraph generate(const M& model, std::optional<int> depth, int threads = 0) {
  using Element = typename M::Element;
  const CartanSpec& spec = model.spec();
  if (spec.affine() && !depth) throw std::invalid_argument("affine crystals are infinite: a depth is required");
  if (depth && *depth < 0) throw std::invalid_argument("depth must be nonnegative");
  int nthreads = thread_count(threads);

  CrystalGraph g;
  g.spec = spec;
  g.lambda = model.lambda();
  g.model = model.name();
  g.depth = depth;

  Element root = model.root();
  NodeData rd = detail::make_node(model, root);
  for (int e : rd.eps)
    if (e != 0) throw std::invalid_argument("root is not a highest-weight element");
  g.root = rd.key;
  g.nodes.emplace(rd.key, std::move(rd));

  std::vector<std::pair<std::string, Element>> frontier{{g.root, root}};
  int n = spec.size();
  for (int level = 0; !frontier.empty(); ++level) {
    if (depth && level >= *depth) break;
    std::vector<std::vector<std::optional<Element>>> children(frontier.size());
    detail::parallel_for(frontier.size(), nthreads, [&](size_t k) {
      auto& out = children[k];
      for (int p = 0; p < n; ++p) out.push_back(model.apply(frontier[k].second, spec.label(p), Dir::Lower));
    });
    std::map<std::string, Element> next;
    for (size_t k = 0; k < frontier.size(); ++k) {
      for (int p = 0; p < n; ++p) {
        auto& c = children[k][p];
        if (!c) continue;
        std::string ck = model.key(*c);
        g.edges.push_back({frontier[k].first, ck, spec.label(p)});
        if (!g.nodes.count(ck)) next.emplace(ck, *c);
      }
    }
    std::vector<std::pair<std::string, Element>> level_nodes(next.begin(), next.end());
    std::vector<NodeData> data(level_nodes.size());
    detail::parallel_for(level_nodes.size(), nthreads,
                         [&](size_t k) { data[k] = detail::make_node(model, level_nodes[k].second); });
    for (auto& d : data) g.nodes.emplace(d.key, std::move(d));
    frontier = std::move(level_nodes);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// Rebuild per-node statistics of a serialized graph through the model.
template <CrystalModel M>
CrystalGraph rehydrate(const M& model, const json& j) {
  CrystalGraph g = parse_graph_header(j);
  if (!(g.spec == model.spec())) throw std::invalid_argument("graph spec does not match the model");
  for (const auto& jn : j.at("nodes")) {
    NodeData d = detail::make_node(model, model.from_payload(jn.at("payload")));
    d.key = jn.at("key").get<std::string>();
    d.drop = jn.at("drop").get<std::vector<int>>();
    if (static_cast<int>(d.drop.size()) != g.spec.size()) throw std::invalid_argument("node drop has wrong length");
    g.nodes[d.key] = std::move(d);
  }
  return g;
}

}  // namespace qcrystal
