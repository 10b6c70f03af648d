#include <doctest.h>

#include <random>

#include "bgg/errors.hpp"
#include "bgg/matq.hpp"
#include "bgg/rootlat.hpp"

using namespace bgg;

namespace {

Weight fw(std::vector<long> coords) {
  Weight w{QVec(coords.size())};
  for (size_t i = 0; i < coords.size(); ++i) w.fund[i] = coords[i];
  return w;
}

RootVector rv(IVec coeffs) { return RootVector{std::move(coeffs)}; }

}  // namespace

TEST_CASE("positive roots of the rank-2 systems") {
  CartanSpec a2(Series::A, 2);
  auto ra = positive_roots(a2);
  REQUIRE(ra.size() == 3);
  CHECK(ra[0] == rv({1, 0}));
  CHECK(ra[1] == rv({0, 1}));
  CHECK(ra[2] == rv({1, 1}));

  CartanSpec c2(Series::C, 2);
  auto rc = positive_roots(c2);
  REQUIRE(rc.size() == 4);
  CHECK(rc[0] == rv({1, 0}));
  CHECK(rc[1] == rv({0, 1}));
  CHECK(rc[2] == rv({1, 1}));
  CHECK(rc[3] == rv({2, 1}));
}

TEST_CASE("positive root counts up to rank 8") {
  for (int r = 1; r <= 8; ++r)
    CHECK(positive_roots(CartanSpec(Series::A, r)).size() == size_t(r) * (r + 1) / 2);
  for (int r = 2; r <= 8; ++r)
    CHECK(positive_roots(CartanSpec(Series::C, r)).size() == size_t(r) * r);
}

TEST_CASE("series C composite roots") {
  CartanSpec c4(Series::C, 4);
  // gamma^{2,3} = beta^{2,3} + beta^{3,4} = alpha2 + 2 alpha3 + alpha4
  RootVector gamma23 = rv({0, 1, 2, 1});
  CHECK(is_positive_root(c4, gamma23));
  CHECK(root_name(c4, gamma23) == "gamma^{2,3}");
  CHECK(root_name(c4, rv({2, 2, 2, 1})) == "gamma^{1,1}");
  CHECK(root_name(c4, rv({0, 0, 0, 1})) == "beta^{4,4}");
  CHECK(root_name(c4, rv({1, 1, 1, 1})) == "beta^{1,4}");
}

TEST_CASE("cartan pairing basics") {
  CartanSpec a5(Series::A, 5);
  CHECK(cartan_pairing(a5, fw({0, 1, 0, 0, 0}), rv({0, 1, 0, 0, 0})) == 1);
  for (int j = 0; j < 5; ++j) {
    IVec c(5, 0);
    c[j] = 1;
    CHECK(cartan_pairing(a5, weyl_vector(a5), rv(c)) == 1);
  }
  CartanSpec c4(Series::C, 4);
  for (int j = 0; j < 4; ++j) {
    IVec c(4, 0);
    c[j] = 1;
    CHECK(cartan_pairing(c4, weyl_vector(c4), rv(c)) == 1);
  }
}

TEST_CASE("pairing agrees with the simple-root expansion") {
  // <mu, alpha_1^vee> computed two ways for mu = -4l2+3l3+l5 in A5
  CartanSpec a5(Series::A, 5);
  Weight mu = fw({0, -4, 3, 0, 1});
  CHECK(cartan_pairing(a5, mu, rv({1, 0, 0, 0, 0})) == 0);
  QVec coords = to_simple_root_coords(a5, mu);
  const CartanMatrix& cm = cartan_matrix(a5);
  Rat via_coords = 0;
  for (int j = 0; j < 5; ++j) via_coords += Rat(cm.at(0, j)) * coords[j];
  CHECK(via_coords == 0);
}

TEST_CASE("simple root coordinates of the curvature labels") {
  CartanSpec a5(Series::A, 5);
  CHECK(to_simple_root_coords(a5, fw({0, -4, 3, 0, 1})) ==
        QVec{-1, -2, 1, 1, 1});
  CartanSpec c4(Series::C, 4);
  CHECK(to_simple_root_coords(c4, fw({0, -5, 4, 0})) == QVec{-1, -2, 2, 1});
  CartanSpec a2(Series::A, 2);
  CHECK(to_simple_root_coords(a2, fw({1, 0})) == QVec{Rat(2, 3), Rat(1, 3)});
}

TEST_CASE("Weyl vector") {
  CartanSpec a2(Series::A, 2);
  Weight delta = weyl_vector(a2);
  CHECK(delta == fw({1, 1}));
  CHECK(to_simple_root_coords(a2, delta) == QVec{1, 1});

  CHECK(weyl_vector(CartanSpec(Series::A, 5)) == fw({1, 1, 1, 1, 1}));

  // half the sum of the 16 positive roots of C4
  CartanSpec c4(Series::C, 4);
  Weight sum = zero_weight(4);
  for (const RootVector& alpha : positive_roots(c4))
    sum = sum + weight_from_root(c4, alpha);
  for (Rat& c : sum.fund) c /= 2;
  CHECK(sum == weyl_vector(c4));
}

TEST_CASE("coordinate round trip on random integral weights") {
  std::mt19937_64 rng(7);
  for (CartanSpec spec : {CartanSpec(Series::A, 5), CartanSpec(Series::C, 4)}) {
    for (int trial = 0; trial < 100; ++trial) {
      Weight mu{QVec(spec.rank)};
      for (int i = 0; i < spec.rank; ++i) mu.fund[i] = long(rng() % 21) - 10;
      CHECK(weight_from_simple_coords(spec, to_simple_root_coords(spec, mu)) == mu);
    }
  }
}

TEST_CASE("positive roots have nonnegative integer coordinates") {
  for (CartanSpec spec : {CartanSpec(Series::A, 6), CartanSpec(Series::C, 5)})
    for (const RootVector& alpha : positive_roots(spec))
      for (long c : alpha.coeffs) CHECK(c >= 0);
}

TEST_CASE("domain and configuration errors") {
  CHECK_THROWS_AS(CartanSpec(Series::A, 0), ConfigError);
  CHECK_THROWS_AS(CartanSpec(Series::C, 1), ConfigError);
  CHECK_THROWS_AS(CartanSpec(Series::A, 9), ConfigError);
  CartanSpec a2(Series::A, 2);
  CHECK_THROWS_AS(cartan_pairing(a2, fw({1, 0}), rv({1, 2})), DomainError);
}

TEST_CASE("weight strings") {
  CHECK(weight_string(fw({0, -4, 3, 0, 1})) == "-4l2+3l3+l5");
  CHECK(weight_string(fw({0, 0})) == "0");
}
