#include <doctest.h>

#include <algorithm>
#include <set>

#include "bgg/errors.hpp"
#include "bgg/parabolic.hpp"

using namespace bgg;

namespace {

GradingInfo make(Series s, int rank, std::vector<int> crossed) {
  CartanSpec spec(s, rank);
  return grade(spec, Crossing(std::move(crossed), rank));
}

}  // namespace

TEST_CASE("A5 crossed at node 2 is |1|-graded") {
  GradingInfo g = make(Series::A, 5, {2});
  CHECK(g.k == 1);
  CHECK(g.delta_plus_pplus.size() == 8);
  std::set<std::string> names;
  for (const RootVector& alpha : g.delta_plus_pplus)
    names.insert(root_name(g.spec, alpha));
  std::set<std::string> expect;
  for (int j = 2; j <= 5; ++j) {
    expect.insert("beta^{1," + std::to_string(j) + "}");
    expect.insert("beta^{2," + std::to_string(j) + "}");
  }
  CHECK(names == expect);
  CHECK(g.dims.at(-1) == 8);
  CHECK(g.dims.at(0) == 5 + 2 * 7);
}

TEST_CASE("A4 crossed at {1,4} has a single top root") {
  GradingInfo g = make(Series::A, 4, {1, 4});
  CHECK(g.k == 2);
  std::vector<RootVector> top;
  for (size_t i = 0; i < g.delta_plus.size(); ++i)
    if (g.heights[i] == 2) top.push_back(g.delta_plus[i]);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == RootVector{{1, 1, 1, 1}});
}

TEST_CASE("C4 crossed at node 2 has a 3-dimensional top slot") {
  GradingInfo g = make(Series::C, 4, {2});
  CHECK(g.k == 2);
  std::set<std::string> top;
  for (size_t i = 0; i < g.delta_plus.size(); ++i)
    if (g.heights[i] == 2) top.insert(root_name(g.spec, g.delta_plus[i]));
  CHECK(top == std::set<std::string>{"gamma^{1,1}", "gamma^{1,2}", "gamma^{2,2}"});
  CHECK(g.dims.at(2) == 3);
  CHECK(g.dims.at(-2) == 3);
}

TEST_CASE("heights add along root sums") {
  for (GradingInfo g : {make(Series::A, 4, {1, 4}), make(Series::C, 4, {2}),
                        make(Series::A, 5, {2})}) {
    for (const RootVector& a : g.delta_plus)
      for (const RootVector& b : g.delta_plus) {
        RootVector sum = a;
        for (int i = 0; i < g.spec.rank; ++i) sum.coeffs[i] += b.coeffs[i];
        if (is_positive_root(g.spec, sum))
          CHECK(g.height_of(sum) == g.height_of(a) + g.height_of(b));
      }
  }
}

TEST_CASE("the negative part is generated in height one") {
  // every root of height h >= 2 splits as height-1 plus height-(h-1)
  for (GradingInfo g : {make(Series::A, 4, {1, 4}), make(Series::C, 4, {2})}) {
    for (const RootVector& alpha : g.delta_plus_pplus) {
      long h = g.height_of(alpha);
      if (h < 2) continue;
      bool found = false;
      for (const RootVector& beta : g.delta_plus_pplus) {
        if (g.height_of(beta) != 1) continue;
        RootVector rest = alpha;
        bool nonneg = true;
        for (int i = 0; i < g.spec.rank; ++i) {
          rest.coeffs[i] -= beta.coeffs[i];
          nonneg &= rest.coeffs[i] >= 0;
        }
        if (nonneg && is_positive_root(g.spec, rest) && g.height_of(rest) == h - 1)
          found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("component dimensions sum to dim g") {
  for (GradingInfo g : {make(Series::A, 5, {2}), make(Series::A, 4, {1, 4}),
                        make(Series::C, 4, {2}), make(Series::C, 3, {1, 2, 3})}) {
    long total = 0;
    for (auto& [i, d] : g.dims) total += d;
    CHECK(total == g.spec.dim_g());
    CHECK(g.dims.at(0) == g.spec.rank + 2 * long(g.delta_plus_g0.size()));
    for (auto& [i, d] : g.dims) CHECK(g.dims.at(-i) == d);
  }
}

TEST_CASE("crossing validation") {
  CHECK_THROWS_AS(Crossing({}, 4), ConfigError);
  CHECK_THROWS_AS(Crossing({0}, 4), ConfigError);
  CHECK_THROWS_AS(Crossing({5}, 4), ConfigError);
  Crossing c({4, 1, 1}, 4);
  CHECK(c.nodes == std::vector<int>{1, 4});
  CHECK(c.text() == "{1,4}");
}
