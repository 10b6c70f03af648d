#include "bgg/matq.hpp"

#include "bgg/errors.hpp"

namespace bgg {

long to_long(const Rat& q) {
  if (!is_integer(q)) throw InternalError("to_long: not an integer: " + rat_string(q));
  if (!q.get_num().fits_slong_p()) throw InternalError("to_long: out of range");
  return q.get_num().get_si();
}

std::string rat_string(const Rat& q) {
  return q.get_den() == 1 ? q.get_num().get_str()
                          : q.get_num().get_str() + "/" + q.get_den().get_str();
}

QVec to_qvec(const IVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

IVec to_ivec(const QVec& v) {
  IVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_long(v[i]);
  return out;
}

std::string vec_string(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_string(v[i]);
  }
  return s + ")";
}

std::string vec_string(const IVec& v) { return vec_string(to_qvec(v)); }

MatQ MatQ::identity(int n) {
  MatQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatQ MatQ::operator*(const MatQ& o) const {
  check_internal(cols == o.rows, "MatQ: shape mismatch in product");
  MatQ out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        if (o.at(k, j) != 0) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

MatQ MatQ::transpose() const {
  MatQ out(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool MatQ::is_zero() const {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

QVec MatQ::col(int j) const {
  QVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

void MatQ::set_col(int j, const QVec& v) {
  for (int i = 0; i < rows; ++i) at(i, j) = v[i];
}

QVec MatQ::apply(const QVec& x) const {
  check_internal(int(x.size()) == cols, "MatQ: apply shape mismatch");
  QVec out(rows, Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0 && x[j] != 0) out[i] += at(i, j) * x[j];
  return out;
}

MatQ hstack(const MatQ& l, const MatQ& r) {
  check_internal(l.rows == r.rows, "hstack: row mismatch");
  MatQ out(l.rows, l.cols + r.cols);
  for (int i = 0; i < l.rows; ++i) {
    for (int j = 0; j < l.cols; ++j) out.at(i, j) = l.at(i, j);
    for (int j = 0; j < r.cols; ++j) out.at(i, l.cols + j) = r.at(i, j);
  }
  return out;
}

MatQ vstack(const MatQ& t, const MatQ& b) {
  check_internal(t.cols == b.cols, "vstack: col mismatch");
  MatQ out(t.rows + b.rows, t.cols);
  for (int i = 0; i < t.rows; ++i)
    for (int j = 0; j < t.cols; ++j) out.at(i, j) = t.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) out.at(t.rows + i, j) = b.at(i, j);
  return out;
}

MatQ from_cols(const std::vector<QVec>& cols, int rows) {
  MatQ out(rows, int(cols.size()));
  for (int j = 0; j < out.cols; ++j) {
    check_internal(int(cols[j].size()) == rows, "from_cols: length mismatch");
    for (int i = 0; i < rows; ++i) out.at(i, j) = cols[j][i];
  }
  return out;
}

Rref rref(MatQ m) {
  Rref out;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        if (m.at(row, j) != 0) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  out.pivots = std::move(pivots);
  return out;
}

int rank_of(const MatQ& m) { return rref(m).rank(); }

MatQ nullspace(const MatQ& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatQ out(m.cols, int(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    out.at(fc, int(f)) = 1;
    for (size_t pi = 0; pi < r.pivots.size(); ++pi)
      out.at(r.pivots[pi], int(f)) = -r.m.at(int(pi), fc);
  }
  return out;
}

MatQ left_nullspace(const MatQ& m) { return nullspace(m.transpose()).transpose(); }

bool solve(const MatQ& A, const QVec& b, QVec* x) {
  MatQ aug = hstack(A, from_cols({b}, A.rows));
  Rref r = rref(std::move(aug));
  for (int c : r.pivots)
    if (c == A.cols) return false;  // pivot in the augmented column
  if (x) {
    x->assign(A.cols, Rat(0));
    for (size_t pi = 0; pi < r.pivots.size(); ++pi)
      (*x)[r.pivots[pi]] = r.m.at(int(pi), A.cols);
  }
  return true;
}

MatQ inverse(const MatQ& m) {
  check_internal(m.rows == m.cols, "inverse: not square");
  Rref r = rref(hstack(m, MatQ::identity(m.rows)));
  check_internal(r.rank() == m.rows, "inverse: singular matrix");
  MatQ out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = r.m.at(i, m.cols + j);
  return out;
}

bool in_column_span(const MatQ& m, const QVec& v) { return solve(m, v, nullptr); }

}  // namespace bgg
