#include <doctest.h>

#include <map>

#include "bgg/bggdiag.hpp"
#include "bgg/errors.hpp"
#include "bgg/liealg.hpp"
#include "bgg/symlab.hpp"

using namespace bgg;

namespace {

GradingInfo make(Series s, int rank, std::vector<int> crossed) {
  CartanSpec spec(s, rank);
  return grade(spec, Crossing(std::move(crossed), rank));
}

Weight fw(std::vector<long> coords) {
  Weight w{QVec(coords.size())};
  for (size_t i = 0; i < coords.size(); ++i) w.fund[i] = coords[i];
  return w;
}

Weight adjoint_of(const CartanSpec& spec) {
  Weight w = zero_weight(spec.rank);
  if (spec.series == Series::A) {
    w.fund[0] = 1;
    w.fund[spec.rank - 1] = 1;
  } else {
    w.fund[0] = 2;
  }
  return w;
}

// sparse algebra element over the basis, for test-side bracket arithmetic
using Sparse = std::map<int, Rat>;

Sparse bracket_sparse(const MatrixAlgebra& alg, const Sparse& x, const Sparse& y) {
  Sparse out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y)
      for (const auto& [t, c] : alg.bracket(i, j)) {
        out[t] += ci * cj * c;
        if (out[t] == 0) out.erase(t);
      }
  return out;
}

}  // namespace

TEST_CASE("matrix models have the right dimensions") {
  MatrixAlgebra a2 = build_algebra(CartanSpec(Series::A, 2));
  CHECK(a2.dim() == 8);
  MatrixAlgebra c2 = build_algebra(CartanSpec(Series::C, 2));
  CHECK(c2.dim() == 10);
}

TEST_CASE("the composite root vector is a bracket of simple ones") {
  MatrixAlgebra alg = build_algebra(CartanSpec(Series::A, 2));
  // positive roots come in the order alpha1, alpha2, alpha1+alpha2
  const auto& terms = alg.bracket(alg.pos_index(0), alg.pos_index(1));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].first == alg.pos_index(2));
  CHECK((terms[0].second == 1 || terms[0].second == -1));
}

TEST_CASE("Jacobi identity on all basis triples of sl(4)") {
  MatrixAlgebra alg = build_algebra(CartanSpec(Series::A, 3));
  int dim = alg.dim();
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        Sparse x{{i, Rat(1)}}, y{{j, Rat(1)}}, z{{k, Rat(1)}};
        Sparse sum = bracket_sparse(alg, x, bracket_sparse(alg, y, z));
        for (const auto& [t, c] : bracket_sparse(alg, y, bracket_sparse(alg, z, x))) {
          sum[t] += c;
          if (sum[t] == 0) sum.erase(t);
        }
        for (const auto& [t, c] : bracket_sparse(alg, z, bracket_sparse(alg, x, y))) {
          sum[t] += c;
          if (sum[t] == 0) sum.erase(t);
        }
        REQUIRE(sum.empty());
      }
}

TEST_CASE("codifferential signs against direct bracket arithmetic") {
  // A2 crossed at node 1: p_+ = {alpha1, alpha1+alpha2}, adjoint module.
  GradingInfo g = make(Series::A, 2, {1});
  HomologyOracle oracle(g, RepKind::Adjoint);
  const MatrixAlgebra& alg = oracle.algebra();
  REQUIRE(oracle.pplus_dim() == 2);
  int z1 = alg.pos_index(0);  // alpha1
  int z2 = alg.pos_index(2);  // alpha1+alpha2

  LinearMapQ d1 = oracle.codifferential_dense(1);
  REQUIRE(d1.mat.rows == 8);
  REQUIRE(d1.mat.cols == 16);
  for (int m = 0; m < 8; ++m) {
    // first eight columns: Z1 (x) v -> -[Z1, v]; then Z2 (x) v
    for (int which = 0; which < 2; ++which) {
      Sparse expect = bracket_sparse(alg, {{which == 0 ? z1 : z2, Rat(-1)}}, {{m, Rat(1)}});
      for (int row = 0; row < 8; ++row) {
        Rat want = expect.count(row) ? expect[row] : Rat(0);
        CHECK(d1.mat.at(row, which * 8 + m) == want);
      }
    }
  }

  LinearMapQ d2 = oracle.codifferential_dense(2);
  REQUIRE(d2.mat.rows == 16);
  REQUIRE(d2.mat.cols == 8);
  for (int m = 0; m < 8; ++m) {
    // Z1 ^ Z2 (x) v -> -Z2 (x) [Z1,v] + Z1 (x) [Z2,v] - [Z1,Z2] (x) v
    Sparse a1 = bracket_sparse(alg, {{z1, Rat(1)}}, {{m, Rat(1)}});
    Sparse a2 = bracket_sparse(alg, {{z2, Rat(1)}}, {{m, Rat(1)}});
    Sparse bb = bracket_sparse(alg, {{z1, Rat(1)}}, {{z2, Rat(1)}});
    QVec expect(16, Rat(0));
    for (const auto& [t, c] : a1) expect[8 + t] -= c;
    for (const auto& [t, c] : a2) expect[t] += c;
    // the bracket lands back in p_+, in the wedge slots; here it vanishes
    REQUIRE(bb.empty());
    for (int row = 0; row < 16; ++row) CHECK(d2.mat.at(row, m) == expect[row]);
  }

  // hand-pinned entries: the column of Z1^Z2 (x) X_{-alpha1}
  int col = alg.neg_index(0);
  CHECK(d2.mat.at(8 + 0, col) == -1);  // -Z2 (x) h1
  CHECK(d2.mat.at(alg.pos_index(1), col) == -1);  // -Z1 (x) X_{alpha2}
}

TEST_CASE("the codifferential squares to zero") {
  for (GradingInfo g : {make(Series::A, 3, {2}), make(Series::A, 4, {1, 4}),
                        make(Series::C, 3, {2})}) {
    HomologyOracle oracle(g, RepKind::Adjoint);
    for (int k = 2; k <= oracle.pplus_dim(); ++k) {
      MatQ prod = oracle.codifferential_dense(k - 1).mat * oracle.codifferential_dense(k).mat;
      CHECK(prod.is_zero());
    }
  }
}

TEST_CASE("degree zero map vanishes") {
  GradingInfo g = make(Series::A, 3, {2});
  HomologyOracle oracle(g, RepKind::Adjoint);
  LinearMapQ d0 = oracle.codifferential_dense(0);
  CHECK(d0.mat.rows == 0);
  CHECK(d0.mat.cols == oracle.rep_dim());
}

TEST_CASE("homology dimensions of the smallest Grassmannian grading") {
  GradingInfo g = make(Series::A, 3, {2});
  std::vector<long> dims = homology_dims(g, RepKind::Adjoint);
  REQUIRE(dims.size() == 5);
  CHECK(dims[0] == g.dims.at(-1));  // H_0 is the full negative part
  long euler = 0;
  for (size_t k = 0; k < dims.size(); ++k) euler += (k % 2 ? -1 : 1) * dims[k];
  CHECK(euler == 0);

  // per-degree match with the diagram dimensions
  BGGDiagram d = bgg_diagram(hasse_graph(g), adjoint_of(g.spec),
                             RealFormTag::preset(RealForm::Split, g));
  std::vector<long> expect(dims.size(), 0);
  for (size_t v = 0; v < d.labels.size(); ++v) expect[d.degrees[v]] += long(d.dims[v]);
  CHECK(dims == expect);
}

TEST_CASE("standard module dimensions match the dual-standard diagram") {
  GradingInfo g = make(Series::A, 3, {2});
  std::vector<long> dims = homology_dims(g, RepKind::Standard);
  BGGDiagram d = bgg_diagram(hasse_graph(g), fw({1, 0, 0}),
                             RealFormTag::preset(RealForm::Split, g));
  std::vector<long> expect(dims.size(), 0);
  for (size_t v = 0; v < d.labels.size(); ++v) expect[d.degrees[v]] += long(d.dims[v]);
  CHECK(dims == expect);
}

TEST_CASE("harmonic component labels") {
  {
    GradingInfo g = make(Series::A, 3, {2});
    auto labels = harmonic_highest_weights(g, RepKind::Standard, 0);
    REQUIRE(labels.size() == 1);
    CHECK(labels[0].first == fw({1, 0, 0}));
    CHECK(labels[0].second == 1);
    CHECK(module_dim(g, labels[0].first) == 2);

    auto h2 = harmonic_highest_weights(g, RepKind::Adjoint, 2);
    REQUIRE(h2.size() == 2);
    CHECK(h2[0].first == fw({0, -4, 4}));
    CHECK(h2[1].first == fw({4, -4, 0}));
  }
  {
    GradingInfo g = make(Series::C, 4, {2});
    auto h2 = harmonic_highest_weights(g, RepKind::Adjoint, 2);
    bool found = false;
    for (const auto& [w, mult] : h2) found |= w == fw({0, -5, 4, 0}) && mult == 1;
    CHECK(found);
  }
}

TEST_CASE("labels agree with the affine action, degree by degree") {
  GradingInfo g = make(Series::A, 3, {2});
  HasseGraph graph = hasse_graph(g);
  for (RepKind rep : {RepKind::Adjoint, RepKind::Standard}) {
    Weight lambda = rep == RepKind::Adjoint ? adjoint_of(g.spec) : fw({1, 0, 0});
    HomologyOracle oracle(g, rep);
    for (int k = 0; k <= oracle.pplus_dim(); ++k) {
      std::vector<Weight> expect;
      for (const HasseNode& n : graph.nodes)
        if (int(n.w.word.size()) == k) expect.push_back(affine_act(g.spec, n.w, lambda));
      std::sort(expect.begin(), expect.end());
      std::vector<Weight> got;
      for (const auto& [w, mult] : oracle.harmonic_labels(k)) {
        CHECK(mult == 1);
        got.push_back(w);
      }
      CHECK(got == expect);
    }
  }
}

TEST_CASE("the Grassmannian degree-2 slot splits as claimed") {
  GradingInfo g = make(Series::A, 5, {2});
  HasseGraph graph = hasse_graph(g);
  BGGDiagram d = bgg_diagram(graph, adjoint_of(g.spec),
                             RealFormTag::preset(RealForm::Split, g));
  HomologyOracle oracle(g, RepKind::Adjoint);
  long h2 = oracle.homology_dim_at(2);
  long expect = d.dims[graph.node_by_name("w_{1,1}")] +
                d.dims[graph.node_by_name("w_{0,2}")];
  CHECK(h2 == expect);
}

TEST_CASE("torsion against curvature components") {
  {
    GradingInfo g = make(Series::A, 5, {2});
    HasseGraph graph = hasse_graph(g);
    BGGDiagram d = bgg_diagram(graph, adjoint_of(g.spec),
                               RealFormTag::preset(RealForm::Split, g));
    std::map<Weight, HomologyOracle::H2Class> classes;
    for (const auto& [w, c] : component_homogeneity(g)) classes[w] = c;
    CHECK(classes.at(d.labels[graph.node_by_name("w_{0,2}")]) ==
          HomologyOracle::H2Class::Torsion);
    CHECK(classes.at(d.labels[graph.node_by_name("w_{1,1}")]) ==
          HomologyOracle::H2Class::Curvature);
  }
  {
    GradingInfo g = make(Series::A, 4, {1, 4});
    HasseGraph graph = hasse_graph(g);
    BGGDiagram d = bgg_diagram(graph, adjoint_of(g.spec),
                               RealFormTag::preset(RealForm::Split, g));
    std::map<Weight, HomologyOracle::H2Class> classes;
    for (const auto& [w, c] : component_homogeneity(g)) classes[w] = c;
    CHECK(classes.at(d.labels[graph.node_by_name("w_{2,0}")]) ==
          HomologyOracle::H2Class::Torsion);
    CHECK(classes.at(d.labels[graph.node_by_name("w_{0,2}")]) ==
          HomologyOracle::H2Class::Torsion);
    CHECK(classes.at(d.labels[graph.node_by_name("w_{1,1}")]) ==
          HomologyOracle::H2Class::Curvature);
  }
  for (int rank : {3, 4}) {
    GradingInfo g = make(Series::C, rank, {2});
    int torsion = 0, curvature = 0;
    for (const auto& [w, c] : component_homogeneity(g))
      (c == HomologyOracle::H2Class::Torsion ? torsion : curvature) += 1;
    CHECK(torsion == 1);
    CHECK(curvature == 1);
  }
}

TEST_CASE("component count equals the coset count") {
  for (GradingInfo g : {make(Series::A, 3, {2}), make(Series::C, 3, {2})}) {
    HomologyOracle oracle(g, RepKind::Adjoint);
    long components = 0;
    for (int k = 0; k <= oracle.pplus_dim(); ++k)
      for (const auto& [w, mult] : oracle.harmonic_labels(k)) components += mult;
    CHECK(components == wp_size(g));
  }
}

TEST_CASE("dense codifferential guard") {
  GradingInfo g = make(Series::C, 4, {2});
  HomologyOracle oracle(g, RepKind::Adjoint);
  CHECK_THROWS_AS(oracle.codifferential_dense(6), ConfigError);
}

TEST_CASE("chain spaces have binomial dimensions and additive weights") {
  GradingInfo g = make(Series::C, 3, {2});
  HomologyOracle oracle(g, RepKind::Standard);
  int P = oracle.pplus_dim();
  for (int k = 0; k <= P; ++k) {
    ChainSpace cs = oracle.chain_space(k);
    CHECK(cs.dim() == binom(P, k) * oracle.rep_dim());
    CHECK(cs.weights.size() == cs.basis.size());
  }
}

TEST_CASE("standard-module oracle equivalence on all five gradings") {
  for (GradingInfo g : {make(Series::A, 3, {2}), make(Series::A, 4, {2}),
                        make(Series::A, 4, {1, 4}), make(Series::C, 3, {2}),
                        make(Series::C, 4, {2})}) {
    std::vector<long> dims = homology_dims(g, RepKind::Standard);
    Weight l1 = zero_weight(g.spec.rank);
    l1.fund[0] = 1;
    BGGDiagram d = bgg_diagram(hasse_graph(g), l1, RealFormTag::preset(RealForm::Split, g));
    std::vector<long> expect(dims.size(), 0);
    for (size_t v = 0; v < d.labels.size(); ++v) expect[d.degrees[v]] += long(d.dims[v]);
    CHECK(dims == expect);
    long euler = 0;
    for (size_t k = 0; k < dims.size(); ++k) euler += (k % 2 ? -1 : 1) * dims[k];
    CHECK(euler == 0);
  }
}
