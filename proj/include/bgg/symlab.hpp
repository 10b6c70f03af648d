#pragma once

#include <string>
#include <vector>

#include "bgg/matq.hpp"

namespace bgg {

long binom(long n, long k);

long dim_sym_e(int deg);               // deg + 1
long dim_lam_fstar(int n, int j);      // C(n, j)
long dim_sym_f(int n, int l);          // C(n+l-1, l)

// One module of a symbol tower.  For j < n the F-part is the kernel of
// the contraction Lambda^j F* (x) S^l F -> Lambda^{j-1} F* (x) S^{l-1} F,
// stored as explicit columns in the monomial product basis; the top slot
// j = n degenerates to S^{k+n+l} E (x) Lambda^n F*.  Line-bundle twists
// are rank-irrelevant and carried nowhere.
struct ModuleBasis {
  enum class Kind { WKernel, WTop, VModule };
  Kind kind = Kind::VModule;
  int n = 0, k = 0, l = 0, j = 0;
  int edeg = 0;   // the S^edeg E factor
  long fdim = 1;  // F-part dimension
  MatQ fkernel;   // kernel columns (Kind::WKernel)

  long dim() const { return (edeg + 1) * fdim; }
};

ModuleBasis build_W(int n, int k, int l, int j);

// X = e_1 (x) alpha_1 + e_2 (x) alpha_2 with alpha_i in F*.
struct SymbolX {
  QVec alpha1, alpha2;
};
bool generic_x(const SymbolX& x);

// Symbol map W^{k,l}_j -> W^{k,l}_{j+1}; degree l+1 in X at the top slot,
// degree 1 elsewhere.
LinearMapQ sigma(int n, int k, int l, int j, const SymbolX& x);

// Symbol map V^{k+j,j} -> V^{k+j+1,j+1} of the plain tower.
LinearMapQ sigma_V(int n, int k, int j, const SymbolX& x);

struct StageReport {
  int j = 0;
  long dim_source = 0, dim_target = 0, rank = 0, nullity = 0;
};

struct ExactnessReport {
  std::vector<long> dims;           // module dimensions, stages 0..n
  std::vector<StageReport> stages;  // maps 0..n-1
  bool exact = false;
  bool generic = false;
  std::vector<int> failing;  // module positions with nonzero homology
};

// The W^{k,l} tower; guards: 2 <= n <= 4, k,l >= 0, k+l <= 5.  Stage
// matrices and ranks are independent; jobs > 1 computes them in parallel.
ExactnessReport exactness_report(int n, int k, int l, const SymbolX& x, int jobs = 1);

// The V^{k,l} tower 0 -> V^{k,0} -> ... -> V^{k+n,n} -> 0.
ExactnessReport plain_tower_report(int n, int k, const SymbolX& x, int jobs = 1);

struct DualPairingReport {
  std::vector<long> dual_dims;      // module dims of the H_{j,n} tower
  std::vector<long> swapped_dims;   // dim W^{l,k}_{n-j}
  bool dims_match = false;
  ExactnessReport transpose_exactness;
};

// Duality of the two boundary towers: the H_{j,n} modules of the BGG
// diagram for lambda = k l_1 + l l_{rank} pair against W^{l,k}_{n-j}, and
// the transposed symbol family stays exact for a generic X.
DualPairingReport dual_pairing_check(int n, int k, int l);

// Gaussian-rational complex number.
struct GaussQ {
  Rat re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

// Quaternion coordinates as pairs q = z + j w.
using QuatVec = std::vector<std::pair<GaussQ, GaussQ>>;

// Complex rank of the right-multiplication map H -> H^n given by v; always
// 2 for nonzero v.  DomainError on the zero vector.
int quaternionic_rank(const QuatVec& v, int n);

}  // namespace bgg
