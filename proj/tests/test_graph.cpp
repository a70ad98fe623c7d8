#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcrystal/pyramid.hpp"
#include "qcrystal/strings.hpp"
#include "qcrystal/tableau_d.hpp"

using namespace qcrystal;

namespace {

auto a3() { return CartanSpec::make(Kind::FinA, 3); }

std::string leaf_of(const CrystalGraph& g) {
  std::set<std::string> sources;
  for (const auto& e : g.edges) sources.insert(e.src);
  for (const auto& [k, d] : g.nodes)
    if (!sources.count(k)) return k;
  return {};
}

}  // namespace

TEST_CASE("vector crystal of A2") {
  auto g = generate(TableauAModel(a3(), {1, 0}), std::nullopt);
  CHECK(g.nodes.size() == 3);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].i + g.edges[1].i == 3);
  CHECK(validate(g).ok());
  CHECK(stembridge(g).ok());
}

TEST_CASE("adjoint of A2 and depth zero") {
  CHECK(generate(TableauAModel(a3(), {1, 1}), std::nullopt).nodes.size() == 8);
  auto g = generate(TableauAModel(a3(), {1, 1}), 0);
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
}

TEST_CASE("affine generation needs a depth") {
  auto s = CartanSpec::make(Kind::AffA, 2);
  CHECK_THROWS_AS(generate(PyramidModel(s, {1, 0, 0}), std::nullopt), std::invalid_argument);
}

TEST_CASE("corrupting one leaf drop gives exactly one violation") {
  auto g = generate(TableauAModel(a3(), {1, 1}), std::nullopt);
  auto leaf = leaf_of(g);
  REQUIRE(!leaf.empty());
  g.nodes[leaf].drop[0] += 1;
  auto r = validate(g);
  CHECK(r.size() == 1);
  CHECK(r.by_node.count(leaf) == 1);
}

TEST_CASE("the spin crystal of D4 validates") {
  auto s = CartanSpec::make(Kind::FinD, 4);
  auto g = generate(TableauDModel(s, {0, 0, 0, 1}), std::nullopt);
  CHECK(g.nodes.size() == 8);
  CHECK(validate(g).ok());
  CHECK(stembridge(g).ok());
}

TEST_CASE("isomorphism") {
  auto g = generate(TableauAModel(a3(), {1, 1}), std::nullopt);
  CHECK(graphs_isomorphic(g, g));
  CHECK_FALSE(graphs_isomorphic(generate(TableauAModel(a3(), {1, 0}), std::nullopt),
                                generate(TableauAModel(a3(), {0, 1}), std::nullopt)));
  CHECK(graphs_isomorphic(g, generate(StringModelA(a3(), {1, 1}), std::nullopt)));
}

TEST_CASE("serialization is deterministic and round trips") {
  TableauAModel m(CartanSpec::make(Kind::FinA, 4), {1, 0, 1});
  auto g1 = generate(m, std::nullopt, 1);
  auto g4 = generate(m, std::nullopt, 4);
  std::string text = serialize(g1);
  CHECK(text == serialize(g4));
  auto back = rehydrate(m, json::parse(text));
  CHECK(serialize(back) == text);
  CHECK(validate(back).ok());
  CHECK(to_dot(g1).rfind("digraph", 0) == 0);
}

TEST_CASE("rehydrate catches a corrupted payload") {
  TableauAModel m(a3(), {1, 1});
  json j = to_json(generate(m, std::nullopt));
  j["nodes"][1]["payload"]["rows"][0][0] = 3;
  j["nodes"][1]["payload"]["rows"][1][0] = 1;
  CHECK_THROWS(rehydrate(m, j));
}

TEST_CASE("report summary lists nodes") {
  Report r;
  r.add("x", "bad");
  CHECK_FALSE(r.ok());
  CHECK(r.summary().find("x: bad") != std::string::npos);
}
