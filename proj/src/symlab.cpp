#include "bgg/symlab.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bgg/bggdiag.hpp"
#include "bgg/errors.hpp"
#include "bgg/parallel.hpp"

namespace bgg {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

long dim_sym_e(int deg) { return deg + 1; }
long dim_lam_fstar(int n, int j) { return binom(n, j); }
long dim_sym_f(int n, int l) { return l < 0 ? 0 : binom(n + l - 1, l); }

namespace {

void check_guards(int n, int k, int l) {
  if (n < 2 || n > 4) throw ConfigError("symbol lab: n must be between 2 and 4");
  if (k < 0 || l < 0 || k + l > 5)
    throw ConfigError("symbol lab: need k, l >= 0 and k + l <= 5");
}

std::vector<std::vector<int>> all_subsets(int n, int j) {
  std::vector<std::vector<int>> out;
  if (j < 0 || j > n) return out;
  std::vector<int> s(j);
  for (int i = 0; i < j; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    if (j == 0) break;
    int t = j - 1;
    while (t >= 0 && s[t] == n - j + t) --t;
    if (t < 0) break;
    ++s[t];
    for (int u = t + 1; u < j; ++u) s[u] = s[u - 1] + 1;
  }
  return out;
}

std::vector<IVec> all_exponents(int n, int l) {
  std::vector<IVec> out;
  if (l < 0) return out;
  IVec e(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int t = left; t >= 0; --t) {
      e[pos] = t;
      rec(pos + 1, left - t);
    }
  };
  rec(0, l);
  return out;
}

// The product space Lambda^j F* (x) S^l F in the monomial basis.
struct FPart {
  int n, j, l;
  std::vector<std::vector<int>> subs;
  std::vector<IVec> exps;
  std::map<std::vector<int>, int> sub_rank;
  std::map<IVec, int> exp_rank;

  FPart(int n_, int j_, int l_) : n(n_), j(j_), l(l_) {
    subs = all_subsets(n, j);
    exps = all_exponents(n, l);
    for (size_t i = 0; i < subs.size(); ++i) sub_rank[subs[i]] = int(i);
    for (size_t i = 0; i < exps.size(); ++i) exp_rank[exps[i]] = int(i);
  }
  long dim() const { return long(subs.size()) * long(exps.size()); }
  int index(int s, int e) const { return int(s * long(exps.size()) + e); }
};

// contraction Lambda^j F* (x) S^l F -> Lambda^{j-1} F* (x) S^{l-1} F
MatQ contraction_matrix(const FPart& src, const FPart& dst) {
  MatQ m(int(dst.dim()), int(src.dim()));
  if (dst.dim() == 0 || src.dim() == 0) return m;
  for (size_t s = 0; s < src.subs.size(); ++s)
    for (size_t e = 0; e < src.exps.size(); ++e) {
      const auto& S = src.subs[s];
      const IVec& ex = src.exps[e];
      for (size_t p = 0; p < S.size(); ++p) {
        int i = S[p];
        if (ex[i] == 0) continue;
        std::vector<int> S2 = S;
        S2.erase(S2.begin() + p);
        IVec e2 = ex;
        e2[i] -= 1;
        int sgn = (p % 2 == 0) ? 1 : -1;
        m.at(dst.index(dst.sub_rank.at(S2), dst.exp_rank.at(e2)),
             src.index(int(s), int(e))) += Rat(sgn * ex[i]);
      }
    }
  return m;
}

// insertion Lambda^{j-1} F* (x) S^{l-1} F -> Lambda^j F* (x) S^l F
MatQ insertion_matrix(const FPart& src, const FPart& dst) {
  MatQ m(int(dst.dim()), int(src.dim()));
  if (dst.dim() == 0 || src.dim() == 0) return m;
  for (size_t s = 0; s < src.subs.size(); ++s)
    for (size_t e = 0; e < src.exps.size(); ++e) {
      const auto& S = src.subs[s];
      const IVec& ex = src.exps[e];
      for (int i = 0; i < src.n; ++i) {
        if (std::binary_search(S.begin(), S.end(), i)) continue;
        std::vector<int> S2 = S;
        auto pos = std::lower_bound(S2.begin(), S2.end(), i);
        int sgn = ((pos - S2.begin()) % 2 == 0) ? 1 : -1;
        S2.insert(pos, i);
        IVec e2 = ex;
        e2[i] += 1;
        m.at(dst.index(dst.sub_rank.at(S2), dst.exp_rank.at(e2)),
             src.index(int(s), int(e))) += Rat(sgn);
      }
    }
  return m;
}

// Kernel of the contraction plus the projection onto it along the
// insertion image; the direct-sum property is verified on construction.
struct FKernel {
  FPart part;
  MatQ kernel;  // columns
  MatQ proj;    // kernel coords of a product-space vector

  FKernel(int n, int j, int l) : part(n, j, l) {
    FPart down(n, j - 1, l - 1);
    kernel = nullspace(contraction_matrix(part, down));
    MatQ ins = insertion_matrix(down, part);
    // independent columns of the insertion image
    Rref r = rref(ins);
    MatQ img(int(part.dim()), r.rank());
    for (int t = 0; t < r.rank(); ++t) img.set_col(t, ins.col(r.pivots[t]));
    check_internal(kernel.cols + img.cols == int(part.dim()),
                   "kernel and insertion image must fill the product space");
    MatQ m = hstack(kernel, img);
    MatQ minv = inverse(m);
    proj = MatQ(kernel.cols, int(part.dim()));
    for (int i = 0; i < kernel.cols; ++i)
      for (int jj = 0; jj < int(part.dim()); ++jj) proj.at(i, jj) = minv.at(i, jj);
  }
};

// wedge with a linear form: Lambda^j F* (x) S^l F -> Lambda^{j+1} F* (x) S^l F
MatQ wedge_matrix(const FPart& src, const FPart& dst, const QVec& alpha) {
  MatQ m(int(dst.dim()), int(src.dim()));
  for (size_t s = 0; s < src.subs.size(); ++s) {
    const auto& S = src.subs[s];
    for (int i = 0; i < src.n; ++i) {
      if (alpha[i] == 0 || std::binary_search(S.begin(), S.end(), i)) continue;
      std::vector<int> S2 = S;
      auto pos = std::lower_bound(S2.begin(), S2.end(), i);
      int sgn = ((pos - S2.begin()) % 2 == 0) ? 1 : -1;
      S2.insert(pos, i);
      for (size_t e = 0; e < src.exps.size(); ++e)
        m.at(dst.index(dst.sub_rank.at(S2), int(e)), src.index(int(s), int(e))) +=
            Rat(sgn) * alpha[i];
    }
  }
  return m;
}

// dense polynomial in n variables as exponent -> coefficient
using Poly = std::map<IVec, Rat>;

Poly linear_form(const QVec& alpha) {
  Poly p;
  int n = int(alpha.size());
  for (int i = 0; i < n; ++i) {
    if (alpha[i] == 0) continue;
    IVec e(n, 0);
    e[i] = 1;
    p[e] = alpha[i];
  }
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      IVec e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  return out;
}

Poly poly_pow(const Poly& a, int p, int n) {
  Poly out;
  out[IVec(n, 0)] = 1;
  for (int i = 0; i < p; ++i) out = poly_mul(out, a);
  return out;
}

// coordinates of m(d) q, a linear form, for |m| = deg(q) - 1
QVec apply_diff(const Poly& q, const IVec& m) {
  int n = int(m.size());
  QVec beta(n, Rat(0));
  for (int u = 0; u < n; ++u) {
    IVec e = m;
    e[u] += 1;
    auto it = q.find(e);
    if (it == q.end()) continue;
    Rat factor(1);
    for (int i = 0; i < n; ++i)
      for (long t = 2; t <= e[i]; ++t) factor *= t;  // e_i!
    beta[u] = it->second * factor;
  }
  return beta;
}

MatQ sigma_top(int n, int k, int l, const SymbolX& x, const FKernel& src) {
  // W^{k,l}_{n-1} -> W^{k,l}_n = S^{k+n+l} E (x) Lambda^n F*
  int edeg = n - 1 + k;
  int tdeg = k + n + l;
  long sdim = (edeg + 1) * src.kernel.cols;
  MatQ out(int(tdeg + 1), int(sdim));
  // full wedge sign of a linear form against an (n-1)-subset
  auto wedge_coord = [&](const QVec& beta, const std::vector<int>& S) {
    int missing = -1;
    for (int i = 0, p = 0; i < n; ++i) {
      if (p < int(S.size()) && S[p] == i)
        ++p;
      else
        missing = i;
    }
    int before = 0;
    for (int s : S)
      if (s < missing) ++before;
    return (before % 2 == 0) ? beta[missing] : -beta[missing];
  };
  Poly a1 = linear_form(x.alpha1), a2 = linear_form(x.alpha2);
  for (int p = 0; p <= l + 1; ++p) {
    int q = l + 1 - p;
    Rat coef = binom(l + 1, p);
    Poly qq = poly_mul(poly_pow(a1, p, n), poly_pow(a2, q, n));
    // F-part contraction against each kernel column
    for (int t = 0; t < src.kernel.cols; ++t) {
      Rat total(0);
      for (size_t s = 0; s < src.part.subs.size(); ++s)
        for (size_t e = 0; e < src.part.exps.size(); ++e) {
          const Rat& kc = src.kernel.at(src.part.index(int(s), int(e)), t);
          if (kc == 0) continue;
          QVec beta = apply_diff(qq, src.part.exps[e]);
          total += kc * wedge_coord(beta, src.part.subs[s]);
        }
      if (total == 0) continue;
      for (int a = 0; a <= edeg; ++a) {
        // e_1^p e_2^q v e_1^a e_2^{edeg-a}
        int a2pos = a + p;
        out.at(a2pos, a * src.kernel.cols + t) += coef * total;
      }
    }
  }
  return out;
}

}  // namespace

ModuleBasis build_W(int n, int k, int l, int j) {
  check_guards(n, k, l);
  if (j < 0 || j > n) throw DomainError("build_W: j out of range");
  ModuleBasis mb;
  mb.n = n;
  mb.k = k;
  mb.l = l;
  mb.j = j;
  if (j == n) {
    mb.kind = ModuleBasis::Kind::WTop;
    mb.edeg = k + n + l;
    mb.fdim = 1;
    return mb;
  }
  mb.kind = ModuleBasis::Kind::WKernel;
  mb.edeg = j + k;
  FKernel fk(n, j, l);
  mb.fkernel = fk.kernel;
  mb.fdim = fk.kernel.cols;
  return mb;
}

bool generic_x(const SymbolX& x) {
  MatQ m(2, int(x.alpha1.size()));
  for (size_t i = 0; i < x.alpha1.size(); ++i) {
    m.at(0, int(i)) = x.alpha1[i];
    m.at(1, int(i)) = x.alpha2[i];
  }
  return rank_of(m) == 2;
}

LinearMapQ sigma(int n, int k, int l, int j, const SymbolX& x) {
  check_guards(n, k, l);
  if (j < 0 || j > n - 1) throw DomainError("sigma: j out of range");
  if (int(x.alpha1.size()) != n || int(x.alpha2.size()) != n)
    throw DomainError("sigma: X has the wrong number of F* coordinates");
  LinearMapQ out;
  out.source = "W(" + std::to_string(k) + "," + std::to_string(l) + ")_" + std::to_string(j);
  out.target = "W(" + std::to_string(k) + "," + std::to_string(l) + ")_" + std::to_string(j + 1);
  FKernel src(n, j, l);
  if (j == n - 1) {
    out.mat = sigma_top(n, k, l, x, src);
    return out;
  }
  FKernel dst(n, j + 1, l);
  MatQ w1 = dst.proj * wedge_matrix(src.part, dst.part, x.alpha1) * src.kernel;
  MatQ w2 = dst.proj * wedge_matrix(src.part, dst.part, x.alpha2) * src.kernel;
  int sed = j + k, ted = j + 1 + k;
  long scols = (sed + 1) * src.kernel.cols;
  out.mat = MatQ(int((ted + 1) * dst.kernel.cols), int(scols));
  for (int a = 0; a <= sed; ++a)
    for (int t = 0; t < src.kernel.cols; ++t)
      for (int t2 = 0; t2 < dst.kernel.cols; ++t2) {
        // e_1 raises a by one, e_2 keeps it
        if (w1.at(t2, t) != 0)
          out.mat.at((a + 1) * dst.kernel.cols + t2, a * src.kernel.cols + t) += w1.at(t2, t);
        if (w2.at(t2, t) != 0)
          out.mat.at(a * dst.kernel.cols + t2, a * src.kernel.cols + t) += w2.at(t2, t);
      }
  return out;
}

LinearMapQ sigma_V(int n, int k, int j, const SymbolX& x) {
  if (n < 2 || n > 4 || k < 0) throw ConfigError("sigma_V: guard exceeded");
  if (j < 0 || j > n - 1) throw DomainError("sigma_V: j out of range");
  FPart src(n, j, 0), dst(n, j + 1, 0);
  MatQ w1 = wedge_matrix(src, dst, x.alpha1);
  MatQ w2 = wedge_matrix(src, dst, x.alpha2);
  int sed = k + j, ted = k + j + 1;
  LinearMapQ out;
  out.source = "V(" + std::to_string(k + j) + "," + std::to_string(j) + ")";
  out.target = "V(" + std::to_string(k + j + 1) + "," + std::to_string(j + 1) + ")";
  out.mat = MatQ(int((ted + 1) * dst.dim()), int((sed + 1) * src.dim()));
  for (int a = 0; a <= sed; ++a)
    for (int t = 0; t < int(src.dim()); ++t)
      for (int t2 = 0; t2 < int(dst.dim()); ++t2) {
        if (w1.at(t2, t) != 0)
          out.mat.at((a + 1) * dst.dim() + t2, a * src.dim() + t) += w1.at(t2, t);
        if (w2.at(t2, t) != 0)
          out.mat.at(a * dst.dim() + t2, a * src.dim() + t) += w2.at(t2, t);
      }
  return out;
}

namespace {

ExactnessReport bookkeeping(std::vector<long> dims, std::vector<MatQ> maps, bool generic,
                            int jobs = 1) {
  ExactnessReport rep;
  rep.dims = std::move(dims);
  rep.generic = generic;
  int n = int(rep.dims.size()) - 1;
  std::vector<long> ranks(n), nullities(n);
  parallel_for(n, jobs, [&](long j) { ranks[j] = rank_of(maps[j]); });
  for (int j = 0; j < n; ++j) {
    StageReport st;
    st.j = j;
    st.dim_source = rep.dims[j];
    st.dim_target = rep.dims[j + 1];
    st.rank = ranks[j];
    st.nullity = st.dim_source - st.rank;
    nullities[j] = st.nullity;
    rep.stages.push_back(st);
  }
  for (int j = 0; j + 1 < n; ++j)
    check_internal((maps[j + 1] * maps[j]).is_zero(), "symbol maps must compose to zero");
  rep.exact = true;
  if (nullities.empty()) {
    rep.exact = rep.dims[0] == 0;
  } else {
    if (nullities[0] != 0) {
      rep.exact = false;
      rep.failing.push_back(0);
    }
    for (int j = 1; j < n; ++j)
      if (nullities[j] != ranks[j - 1]) {
        rep.exact = false;
        rep.failing.push_back(j);
      }
    if (ranks[n - 1] != rep.dims[n]) {
      rep.exact = false;
      rep.failing.push_back(n);
    }
  }
  return rep;
}

}  // namespace

ExactnessReport exactness_report(int n, int k, int l, const SymbolX& x, int jobs) {
  check_guards(n, k, l);
  std::vector<long> dims;
  for (int j = 0; j <= n; ++j) dims.push_back(build_W(n, k, l, j).dim());
  std::vector<MatQ> maps(n);
  parallel_for(n, jobs, [&](long j) { maps[j] = sigma(n, k, l, int(j), x).mat; });
  return bookkeeping(std::move(dims), std::move(maps), generic_x(x), jobs);
}

ExactnessReport plain_tower_report(int n, int k, const SymbolX& x, int jobs) {
  if (n < 2 || n > 4 || k < 0 || k > 5) throw ConfigError("plain tower: guard exceeded");
  std::vector<long> dims;
  for (int j = 0; j <= n; ++j) dims.push_back(dim_sym_e(k + j) * dim_lam_fstar(n, j));
  std::vector<MatQ> maps(n);
  parallel_for(n, jobs, [&](long j) { maps[j] = sigma_V(n, k, int(j), x).mat; });
  return bookkeeping(std::move(dims), std::move(maps), generic_x(x), jobs);
}

DualPairingReport dual_pairing_check(int n, int k, int l) {
  check_guards(n, k, l);
  DualPairingReport rep;
  for (int j = 0; j <= n; ++j)
    rep.swapped_dims.push_back(build_W(n, l, k, n - j).dim());

  // the H_{j,n} tower of the diagram for lambda = k l_1 + l l_{rank}
  CartanSpec spec(Series::A, n + 1);
  GradingInfo g = grade(spec, Crossing({2}, spec.rank));
  HasseGraph graph = hasse_graph(g);
  Weight lambda = zero_weight(spec.rank);
  lambda.fund[0] = k;
  lambda.fund[spec.rank - 1] = l;
  RealFormTag tag = RealFormTag::preset(RealForm::Split, g);
  BGGDiagram d = bgg_diagram(graph, lambda, tag);
  for (int j = 0; j <= n; ++j) {
    int node = graph.node_by_name("w_{" + std::to_string(j) + "," + std::to_string(n) + "}");
    check_internal(node >= 0, "missing boundary node in the diagram");
    rep.dual_dims.push_back(long(d.dims[node]));
  }
  rep.dims_match = rep.dual_dims == rep.swapped_dims;

  // transposed family of the swapped tower, reversed
  SymbolX x{QVec(n, Rat(0)), QVec(n, Rat(0))};
  x.alpha1[0] = 1;
  x.alpha2[1] = 1;
  std::vector<MatQ> maps;
  for (int j = 0; j < n; ++j) maps.push_back(sigma(n, l, k, n - 1 - j, x).mat.transpose());
  rep.transpose_exactness = bookkeeping(rep.swapped_dims, std::move(maps), true);
  return rep;
}

namespace {

GaussQ gq_mul(const GaussQ& a, const GaussQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussQ gq_sub(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
GaussQ gq_div(const GaussQ& a, const GaussQ& b) {
  Rat n2 = b.re * b.re + b.im * b.im;
  check_internal(n2 != 0, "division by zero Gaussian rational");
  GaussQ conj{b.re, -b.im};
  GaussQ prod = gq_mul(a, conj);
  return {prod.re / n2, prod.im / n2};
}

}  // namespace

int quaternionic_rank(const QuatVec& v, int n) {
  if (int(v.size()) != n) throw DomainError("quaternionic_rank: length mismatch");
  bool nonzero = false;
  for (const auto& [a, b] : v) nonzero |= !a.is_zero() || !b.is_zero();
  if (!nonzero) throw DomainError("quaternionic_rank: zero vector");
  // right multiplication by q = z + j w on each coordinate a + j b gives
  // the complex 2x2 block [[a, -conj b], [b, conj a]]
  std::vector<std::vector<GaussQ>> m;
  for (const auto& [a, b] : v) {
    m.push_back({a, {-b.re, b.im}});
    m.push_back({b, {a.re, -a.im}});
  }
  int rank = 0;
  size_t row = 0;
  for (int col = 0; col < 2 && row < m.size(); ++col) {
    size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    for (size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      GaussQ f = gq_div(m[i][col], m[row][col]);
      for (int c = col; c < 2; ++c) m[i][c] = gq_sub(m[i][c], gq_mul(f, m[row][c]));
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace bgg
