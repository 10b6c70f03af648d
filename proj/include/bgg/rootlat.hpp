#pragma once

#include <string>
#include <vector>

#include "bgg/rational.hpp"

namespace bgg {

enum class Series { A, C };

struct CartanSpec {
  Series series;
  int rank;

  CartanSpec(Series s, int r);

  long dim_g() const;  // r(r+2) for A_r, r(2r+1) for C_r
  std::string name() const;

  bool operator==(const CartanSpec& o) const {
    return series == o.series && rank == o.rank;
  }
};

// A root written over the simple roots alpha_1..alpha_rank.
struct RootVector {
  IVec coeffs;

  long height() const;
  bool operator==(const RootVector& o) const { return coeffs == o.coeffs; }
  bool operator<(const RootVector& o) const { return coeffs < o.coeffs; }
};

// A weight written over the fundamental weights lambda_1..lambda_rank.
struct Weight {
  QVec fund;

  bool integral() const;
  bool is_zero() const;
  bool operator==(const Weight& o) const { return fund == o.fund; }
  bool operator<(const Weight& o) const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
};

// Entry (i,j) is <alpha_j, alpha_i^vee>, 0-based.  For the C series the
// long simple root sits at position rank, so entry (rank-2, rank-1) = -2
// and entry (rank-1, rank-2) = -1.
struct CartanMatrix {
  int rank;
  std::vector<IVec> entry;

  long at(int i, int j) const { return entry[i][j]; }
};

const CartanMatrix& cartan_matrix(const CartanSpec& spec);

// d_i = (alpha_i, alpha_i)/2: all 1 for series A, (1,..,1,2) for series C.
const IVec& symmetrizers(const CartanSpec& spec);

// All positive roots, each exactly once, ordered by height and then by
// descending lexicographic coefficient order (graded lexicographic).
const std::vector<RootVector>& positive_roots(const CartanSpec& spec);

bool is_positive_root(const CartanSpec& spec, const RootVector& alpha);
bool is_root(const CartanSpec& spec, const RootVector& alpha);

// <mu, alpha^vee> for an arbitrary root alpha, via the invariant form.
Rat cartan_pairing(const CartanSpec& spec, const Weight& mu,
                   const RootVector& alpha);

// <alpha, beta^vee> for roots; always an integer.
long root_pairing(const CartanSpec& spec, const RootVector& alpha,
                  const RootVector& beta);

// Coordinates of mu over the simple roots (solves C c = m exactly).
QVec to_simple_root_coords(const CartanSpec& spec, const Weight& mu);

// Inverse of to_simple_root_coords.
Weight weight_from_simple_coords(const CartanSpec& spec, const QVec& coords);

Weight weight_from_root(const CartanSpec& spec, const RootVector& alpha);
Weight weight_from_fund(QVec fund);

// delta, half the sum of the positive roots; (1,...,1) in fundamental
// coordinates.
Weight weyl_vector(const CartanSpec& spec);

Weight zero_weight(int rank);

// Coordinates over the orthogonal basis e_1,..: length rank+1 for A
// (entries sum to zero), rank for C.
QVec to_euclidean(const CartanSpec& spec, const RootVector& alpha);

// Classical root name: "beta^{i,j}" or, for series C, "gamma^{i,j}".
std::string root_name(const CartanSpec& spec, const RootVector& alpha);

std::string weight_string(const Weight& mu);  // e.g. "-4l2+3l3+l5"

}  // namespace bgg
