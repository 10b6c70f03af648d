#include <doctest.h>

#include <random>

#include "bgg/bggdiag.hpp"
#include "bgg/errors.hpp"
#include "bgg/symlab.hpp"

using namespace bgg;

namespace {

SymbolX generic(int n) {
  SymbolX x{QVec(n, Rat(0)), QVec(n, Rat(0))};
  x.alpha1[0] = 1;
  x.alpha2[1] = 1;
  return x;
}

SymbolX random_x(std::mt19937_64& rng, int n) {
  SymbolX x{QVec(n), QVec(n)};
  for (int i = 0; i < n; ++i) {
    x.alpha1[i] = long(rng() % 7) - 3;
    x.alpha2[i] = long(rng() % 7) - 3;
  }
  return x;
}

}  // namespace

TEST_CASE("module dimensions") {
  CHECK(build_W(2, 0, 1, 1).dim() == 6);    // S^1 E (x) (F* (x) F)_0
  CHECK(build_W(2, 0, 1, 1).fdim == 3);
  CHECK(build_W(3, 1, 0, 2).dim() == 12);   // S^3 E (x) Lam^2 F*
  CHECK(build_W(2, 1, 2, 2).dim() == 6);    // top slot: S^5 E
  CHECK(dim_sym_f(3, 2) == 6);
  CHECK(dim_lam_fstar(4, 2) == 6);
}

TEST_CASE("symbol maps square to zero on random X") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + int(rng() % 2);
    int k = int(rng() % 3), l = int(rng() % 3);
    SymbolX x = random_x(rng, n);
    for (int j = 0; j + 1 < n; ++j) {
      MatQ prod = sigma(n, k, l, j + 1, x).mat * sigma(n, k, l, j, x).mat;
      CHECK(prod.is_zero());
    }
  }
}

TEST_CASE("the l = 0 tower coincides with the plain tower") {
  for (int k = 0; k <= 2; ++k) {
    SymbolX x = generic(3);
    ExactnessReport w = exactness_report(3, k, 0, x);
    ExactnessReport v = plain_tower_report(3, k, x);
    CHECK(w.dims == v.dims);
    for (size_t j = 0; j < w.stages.size(); ++j) {
      CHECK(w.stages[j].rank == v.stages[j].rank);
      CHECK(w.stages[j].nullity == v.stages[j].nullity);
    }
  }
}

TEST_CASE("zero X gives the zero map and kills exactness at the source") {
  SymbolX zero{QVec(3, Rat(0)), QVec(3, Rat(0))};
  CHECK(sigma(3, 1, 1, 0, zero).mat.is_zero());
  ExactnessReport rep = plain_tower_report(3, 1, zero);
  CHECK_FALSE(rep.exact);
  REQUIRE(!rep.failing.empty());
  CHECK(rep.failing.front() == 0);
}

TEST_CASE("plain tower exactness") {
  ExactnessReport rep = plain_tower_report(2, 0, generic(2));
  CHECK(rep.dims == std::vector<long>{1, 4, 3});
  CHECK(rep.exact);
  CHECK(rep.generic);
  CHECK(plain_tower_report(3, 2, generic(3)).exact);
}

TEST_CASE("full tower exactness and its failure for dependent forms") {
  CHECK(exactness_report(3, 1, 2, generic(3)).exact);
  SymbolX dep{QVec(3, Rat(0)), QVec(3, Rat(0))};
  dep.alpha1[0] = 1;
  dep.alpha2[0] = 2;
  ExactnessReport rep = exactness_report(3, 1, 2, dep);
  CHECK_FALSE(rep.generic);
  CHECK_FALSE(rep.exact);
  CHECK(!rep.failing.empty());
}

TEST_CASE("exactness is equivalent to independence on an integer grid") {
  for (int n : {2, 3}) {
    std::vector<QVec> forms;
    // all vectors with entries in {-1, 0, 1}
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      QVec v(n);
      int c = code;
      for (int i = 0; i < n; ++i) {
        v[i] = c % 3 - 1;
        c /= 3;
      }
      forms.push_back(v);
    }
    int exact_count = 0;
    for (size_t a = 0; a < forms.size(); ++a)
      for (size_t b = a; b < forms.size(); ++b) {
        if (n == 3 && (a * 7 + b) % 11 != 0) continue;  // sample the larger grid
        SymbolX x{forms[a], forms[b]};
        bool indep = generic_x(x);
        ExactnessReport rep = exactness_report(n, 1, 1, x);
        CHECK(rep.exact == indep);
        exact_count += rep.exact;
      }
    CHECK(exact_count > 0);
  }
}

TEST_CASE("short exact dimension bookkeeping") {
  // dim W^{k+1,l-1}_{j-1} + dim W^{k,l}_j = dim W^{k,0}_j * dim S^l F
  for (int n : {2, 3})
    for (int k = 0; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l)
        for (int j = 1; j <= n - 1; ++j) {
          long lhs = build_W(n, k + 1, l - 1, j - 1).dim() + build_W(n, k, l, j).dim();
          long rhs = build_W(n, k, 0, j).dim() * dim_sym_f(n, l);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("the top slot degenerates to an isomorphism") {
  // dim (Lam^{n-1} F* (x) S^{l-1} F)_0 = dim (Lam^n F* (x) S^l F)
  for (int n : {2, 3})
    for (int l = 1; l <= 2; ++l)
      CHECK(build_W(n, 0, l - 1, n - 1).fdim == dim_sym_f(n, l));
}

TEST_CASE("module dimensions agree with the diagram dimensions") {
  // W^{k,l}_j induces the j-th slot of the first row for
  // lambda = k l_1 + l l_{rank}
  int n = 3, k = 1, l = 2;
  CartanSpec spec(Series::A, n + 1);
  GradingInfo g = grade(spec, Crossing({2}, spec.rank));
  HasseGraph graph = hasse_graph(g);
  Weight lambda = zero_weight(spec.rank);
  lambda.fund[0] = k;
  lambda.fund[spec.rank - 1] = l;
  BGGDiagram d = bgg_diagram(graph, lambda, RealFormTag::preset(RealForm::Split, g));
  for (int j = 0; j <= n; ++j) {
    int node = graph.node_by_name("w_{0," + std::to_string(j) + "}");
    REQUIRE(node >= 0);
    CHECK(build_W(n, k, l, j).dim() == d.dims[node]);
  }
}

TEST_CASE("dual pairing") {
  DualPairingReport rep = dual_pairing_check(2, 1, 0);
  CHECK(rep.dims_match);
  CHECK(rep.dual_dims.front() == rep.swapped_dims.front());
  CHECK(rep.dual_dims.back() == rep.swapped_dims.back());
  CHECK(dual_pairing_check(2, 1, 1).transpose_exactness.exact);
  CHECK(dual_pairing_check(3, 2, 1).dims_match);
}

TEST_CASE("quaternionic rank") {
  GaussQ one{Rat(1), Rat(0)}, zero{Rat(0), Rat(0)}, i{Rat(0), Rat(1)};
  CHECK(quaternionic_rank({{one, zero}, {zero, zero}}, 2) == 2);
  CHECK(quaternionic_rank({{zero, one}, {zero, zero}}, 2) == 2);  // v = (j, 0)
  CHECK(quaternionic_rank({{i, i}}, 1) == 2);
  CHECK_THROWS_AS(quaternionic_rank({{zero, zero}}, 1), DomainError);
  CHECK_THROWS_AS(quaternionic_rank({{one, zero}}, 2), DomainError);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(build_W(5, 0, 0, 0), ConfigError);
  CHECK_THROWS_AS(exactness_report(3, 3, 3, generic(3)), ConfigError);
  CHECK_THROWS_AS(build_W(3, 0, 0, 4), DomainError);
}

TEST_CASE("the guard boundary at n = 4 stays exact") {
  SymbolX x = generic(4);
  CHECK(exactness_report(4, 0, 1, x).exact);
  for (int j = 0; j + 1 < 4; ++j)
    CHECK((sigma(4, 0, 1, j + 1, x).mat * sigma(4, 0, 1, j, x).mat).is_zero());
}

TEST_CASE("the smallest full tower") {
  ExactnessReport rep = exactness_report(2, 0, 0, generic(2));
  CHECK(rep.dims == std::vector<long>{1, 4, 3});
  CHECK(rep.exact);
}
