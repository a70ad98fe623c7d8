#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcrystal/signature.hpp"

using namespace qcrystal;

namespace {

SignedWord word(const std::string& signs) {
  SignedWord w;
  for (size_t k = 0; k < signs.size(); ++k) w.push_back({static_cast<int>(k), signs[k] == '-', signs[k] == '+'});
  return w;
}

}  // namespace

TEST_CASE("reduction of the worked example signs") {
  auto r = reduce_signature(word("--++-+"));
  CHECK(r.eps() == 2);
  CHECK(r.phi() == 2);
  CHECK(r.minus == std::vector<int>{0, 1});
  CHECK(r.plus == std::vector<int>{2, 5});
}

TEST_CASE("trivial reductions") {
  CHECK(reduce_signature({}).eps() == 0);
  auto r = reduce_signature(word("+-"));
  CHECK(r.eps() == 0);
  CHECK(r.phi() == 0);
  CHECK_FALSE(tensor_apply(SignedWord{{0, 0, 0}, {1, 0, 0}}, Dir::Lower));
  CHECK_FALSE(tensor_apply(SignedWord{{0, 0, 0}, {1, 0, 0}}, Dir::Raise));
}

TEST_CASE("operators pick the leftmost plus and rightmost minus") {
  auto w = word("--++-+");
  CHECK(*tensor_apply(w, Dir::Lower) == 2);
  CHECK(*tensor_apply(w, Dir::Raise) == 1);
}

TEST_CASE("factors with several signs and indices") {
  SignedWord w{{7, 1, 2}, {9, 2, 1}};
  auto r = reduce_signature(w);
  CHECK(r.eps() == 1);
  CHECK(r.phi() == 1);
  CHECK(*tensor_apply(w, Dir::Lower) == 9);
  CHECK(*tensor_apply(w, Dir::Raise) == 7);
}

TEST_CASE("empty factors do not change the reduction") {
  auto a = reduce_signature(word("+-+--++"));
  auto w = word("+-+--++");
  w.insert(w.begin() + 3, SignFactor{99, 0, 0});
  auto b = reduce_signature(w);
  CHECK(a.eps() == b.eps());
  CHECK(a.phi() == b.phi());
}

TEST_CASE("lowering then raising hits the same factor") {
  for (std::string s : {"+", "-+", "+-+", "--+++-", "+++---+"}) {
    auto w = word(s);
    auto k = tensor_apply(w, Dir::Lower);
    if (!k) continue;
    w[*k].plus -= 1;
    w[*k].minus += 1;
    CHECK(tensor_apply(w, Dir::Raise) == k);
  }
}
