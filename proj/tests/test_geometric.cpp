#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcrystal/geometric.hpp"

using namespace qcrystal;

namespace {

template <class M, class Reps>
void check_model(const M& m, std::optional<int> depth, Reps reps) {
  auto g = generate(m, depth);
  for (const auto& [k, d] : g.nodes) {
    auto x = m.from_payload(d.payload);
    for (int p = 0; p < m.spec().size(); ++p) CHECK(geometric_epsilon(m, x, m.spec().label(p)) == d.eps[p]);
    auto rs = reps(x);
    CHECK(geometric_drop(m.spec(), rs) == d.drop);
    for (const auto& r : rs) CHECK(moment_map_zero(r));
  }
}

}  // namespace

TEST_CASE("worked example") {
  auto spec = CartanSpec::make(Kind::FinA, 6);
  TableauAModel m(spec, {2, 1, 1, 1, 0});
  auto t = parse_tableau("12233,234,45,5");
  CHECK(geometric_epsilon(m, t, 2) == 2);
  CHECK(geometric_epsilon(m, m.root(), 2) == 0);
  auto reps = tableau_reps(spec, t);
  CHECK(reps.size() == 11);
  CHECK(geometric_drop(spec, reps) == m.drop(t));
}

TEST_CASE("type A tableaux and strings") {
  for (auto [n, w] : std::vector<std::pair<int, std::vector<int>>>{{4, {1, 1, 0}}, {5, {1, 0, 1, 0}}, {4, {0, 2, 1}}}) {
    auto spec = CartanSpec::make(Kind::FinA, n);
    TableauAModel m(spec, w);
    check_model(m, std::nullopt, [&](const Tableau& t) { return tableau_reps(spec, t); });
    StringModelA s(spec, w);
    check_model(s, std::nullopt, [&](const StringElement& e) { return tableau_reps(spec, tableau_of(e)); });
  }
}

TEST_CASE("type D tableaux") {
  for (auto [n, w] :
       std::vector<std::pair<int, std::vector<int>>>{{4, {1, 0, 1, 1}}, {4, {0, 1, 0, 1}}, {5, {0, 1, 0, 0, 1}}, {5, {1, 0, 0, 1, 0}}}) {
    TableauDModel m(CartanSpec::make(Kind::FinD, n), w);
    check_model(m, std::nullopt, [&](const DTableau& t) { return d_tableau_reps(m, t); });
  }
}

TEST_CASE("pyramids") {
  for (auto [n, w, depth] : std::vector<std::tuple<int, std::vector<int>, int>>{{2, {1, 0, 0}, 6}, {1, {1, 1}, 4}, {2, {1, 1, 0}, 4}}) {
    PyramidModel m(CartanSpec::make(Kind::AffA, n), w);
    check_model(m, depth, [&](const Pyramid& p) { return pyramid_reps(m, p); });
  }
}

TEST_CASE("wall columns carry the drop") {
  WallModel m(CartanSpec::make(Kind::AffD, 4), 1);
  auto g = generate(m, 6);
  for (const auto& [k, d] : g.nodes) {
    auto y = m.from_payload(d.payload);
    std::vector<QuiverRep> reps;
    for (int j = 0; j < static_cast<int>(y.columns.size()); ++j)
      if (!m.column_blocks(y, j).empty()) reps.push_back(column_to_rep(m, y, j));
    CHECK(geometric_drop(m.spec(), reps) == d.drop);
    for (const auto& r : reps) {
      CHECK(moment_map_zero(r));
      CHECK(is_nilpotent(r));
    }
  }
}
