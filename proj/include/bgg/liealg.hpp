#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "bgg/matq.hpp"
#include "bgg/parabolic.hpp"

namespace bgg {

// Concrete matrix model of g: traceless (r+1)x(r+1) matrices for A_r,
// symplectic 2rx2r matrices for C_r.  Basis order: Cartan h_1..h_r, then
// one root vector per positive root in rootlat order, then the negatives.
struct MatrixAlgebra {
  CartanSpec spec;
  int nmat = 0;  // matrix size
  std::vector<MatQ> basis;
  std::vector<RootVector> roots;  // positive roots

  int dim() const { return int(basis.size()); }
  int cartan_index(int i) const { return i; }                      // 0-based
  int pos_index(int a) const { return spec.rank + a; }             // a-th positive root
  int neg_index(int a) const { return spec.rank + int(roots.size()) + a; }

  // [basis_i, basis_j] expanded over the basis (sparse, exact).
  const std::vector<std::pair<int, Rat>>& bracket(int i, int j) const;

  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket_table;
};

// Guarded at rank <= 8.
MatrixAlgebra build_algebra(const CartanSpec& spec);

enum class RepKind { Adjoint, Standard };

// A fixed degree of the standard complex Lambda^k p_+ (x) V.
struct ChainSpace {
  int degree = 0;
  // basis element: (ascending subset of p_+ root positions, V basis index)
  std::vector<std::pair<std::vector<int>, int>> basis;
  std::vector<IVec> weights;  // fundamental coordinates per basis element
  long dim() const { return long(basis.size()); }
};

// Exact homology of p_+ with values in the adjoint or standard module;
// all linear algebra runs per weight block.  "Standard" is the module
// whose dual label is lambda_1 (the dual of the defining representation
// for series A; series C is self-dual).
class HomologyOracle {
 public:
  HomologyOracle(const GradingInfo& grading, RepKind rep);

  const GradingInfo& grading() const;
  const MatrixAlgebra& algebra() const;
  int pplus_dim() const;
  int rep_dim() const;

  ChainSpace chain_space(int k) const;
  LinearMapQ codifferential_dense(int k) const;  // guarded by matrix size
  std::vector<long> homology_dims() const;
  long homology_dim_at(int k) const;  // builds only degrees k-1..k+1

  // (dual label, multiplicity) of the degree-k components, sorted.
  std::vector<std::pair<Weight, int>> harmonic_labels(int k) const;

  enum class H2Class { Torsion, Curvature };
  // dual label -> class, for V = adjoint, k = 2
  std::vector<std::pair<Weight, H2Class>> h2_component_classes() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

LinearMapQ codifferential(const GradingInfo& g, RepKind rep, int k);
std::vector<long> homology_dims(const GradingInfo& g, RepKind rep);
std::vector<std::pair<Weight, int>> harmonic_highest_weights(const GradingInfo& g,
                                                             RepKind rep, int k);
std::vector<std::pair<Weight, HomologyOracle::H2Class>> component_homogeneity(
    const GradingInfo& g);

}  // namespace bgg
