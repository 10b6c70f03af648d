#pragma once

#include <string>
#include <vector>

#include "bgg/rational.hpp"

namespace bgg {

// Dense matrix of exact rationals, row-major.
struct MatQ {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  MatQ() = default;
  MatQ(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

  Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static MatQ identity(int n);

  MatQ operator*(const MatQ& o) const;
  MatQ transpose() const;
  bool is_zero() const;

  QVec col(int j) const;
  void set_col(int j, const QVec& v);
  QVec apply(const QVec& x) const;  // this * x
};

MatQ hstack(const MatQ& l, const MatQ& r);
MatQ vstack(const MatQ& t, const MatQ& b);
MatQ from_cols(const std::vector<QVec>& cols, int rows);

// Reduced row echelon form (in place copy); returns pivot columns.
struct Rref {
  MatQ m;
  std::vector<int> pivots;
  int rank() const { return int(pivots.size()); }
};
Rref rref(MatQ m);

int rank_of(const MatQ& m);

// Columns form a basis of {x : m x = 0}.
MatQ nullspace(const MatQ& m);

// Rows y with y m = 0 (as a matrix whose rows are the basis).
MatQ left_nullspace(const MatQ& m);

// Solve A x = b; returns false if inconsistent.
bool solve(const MatQ& A, const QVec& b, QVec* x);

// Inverse of a square invertible matrix; throws InternalError otherwise.
MatQ inverse(const MatQ& m);

// Is v in the column span of m?
bool in_column_span(const MatQ& m, const QVec& v);

// Exact linear map with basis bookkeeping for reports.
struct LinearMapQ {
  MatQ mat;            // target dim x source dim
  std::string source;  // human-readable basis description
  std::string target;
};

}  // namespace bgg
