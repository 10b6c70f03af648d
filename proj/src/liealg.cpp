#include "bgg/liealg.hpp"

#include <algorithm>
#include <unordered_map>

#include "bgg/errors.hpp"

namespace bgg {

namespace {

MatQ emat(int n, int i, int j) {
  MatQ m(n, n);
  m.at(i, j) = 1;
  return m;
}

MatQ mat_add(const MatQ& a, const MatQ& b, const Rat& s) {
  MatQ out = a;
  for (size_t t = 0; t < out.a.size(); ++t) out.a[t] += s * b.a[t];
  return out;
}

MatQ commutator(const MatQ& a, const MatQ& b) {
  return mat_add(a * b, b * a, Rat(-1));
}

bool symplectic_ok(const MatQ& x, int r) {
  // X^T J + J X = 0 with J = [[0, I], [-I, 0]]
  int n = 2 * r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // (J X)_{ij}
      Rat jx = i < r ? x.at(r + i, j) : -x.at(i - r, j);
      // (X^T J)_{ij}
      Rat xtj = j < r ? -x.at(r + j, i) : x.at(j - r, i);
      if (jx + xtj != 0) return false;
    }
  return true;
}

}  // namespace

const std::vector<std::pair<int, Rat>>& MatrixAlgebra::bracket(int i, int j) const {
  return bracket_table[i][j];
}

MatrixAlgebra build_algebra(const CartanSpec& spec) {
  MatrixAlgebra alg{spec};
  int r = spec.rank;
  alg.roots = positive_roots(spec);
  alg.nmat = spec.series == Series::A ? r + 1 : 2 * r;
  int n = alg.nmat;

  if (spec.series == Series::A) {
    for (int i = 0; i < r; ++i)
      alg.basis.push_back(mat_add(emat(n, i, i), emat(n, i + 1, i + 1), Rat(-1)));
    auto root_vec = [&](const RootVector& alpha, bool neg) {
      QVec e = to_euclidean(spec, alpha);
      int a = -1, b = -1;
      for (int t = 0; t <= r; ++t) {
        if (e[t] == 1) a = t;
        if (e[t] == -1) b = t;
      }
      return neg ? emat(n, b, a) : emat(n, a, b);
    };
    for (const RootVector& alpha : alg.roots) alg.basis.push_back(root_vec(alpha, false));
    for (const RootVector& alpha : alg.roots) alg.basis.push_back(root_vec(alpha, true));
    for (const MatQ& x : alg.basis) {
      Rat tr(0);
      for (int i = 0; i < n; ++i) tr += x.at(i, i);
      check_internal(tr == 0, "sl basis element must be traceless");
    }
  } else {
    for (int i = 0; i + 1 < r; ++i) {
      MatQ h = mat_add(emat(n, i, i), emat(n, i + 1, i + 1), Rat(-1));
      h = mat_add(h, mat_add(emat(n, r + i, r + i), emat(n, r + i + 1, r + i + 1), Rat(-1)),
                  Rat(-1));
      alg.basis.push_back(h);
    }
    alg.basis.push_back(mat_add(emat(n, r - 1, r - 1), emat(n, 2 * r - 1, 2 * r - 1), Rat(-1)));
    auto root_vec = [&](const RootVector& alpha, bool neg) {
      QVec e = to_euclidean(spec, alpha);
      int a = -1, b = -1, two = -1;
      for (int t = 0; t < r; ++t) {
        if (e[t] == 1) (a < 0 ? a : b) = t;
        if (e[t] == -1) b = t;
        if (e[t] == 2) two = t;
      }
      bool minus = false;
      for (int t = 0; t < r; ++t) minus |= e[t] == -1;
      if (two >= 0) {
        // 2 e_a
        return neg ? emat(n, r + two, two) : emat(n, two, r + two);
      }
      if (minus) {
        // e_a - e_b, a < b
        return neg ? mat_add(emat(n, b, a), emat(n, r + a, r + b), Rat(-1))
                   : mat_add(emat(n, a, b), emat(n, r + b, r + a), Rat(-1));
      }
      // e_a + e_b, a < b
      return neg ? mat_add(emat(n, r + b, a), emat(n, r + a, b), Rat(1))
                 : mat_add(emat(n, a, r + b), emat(n, b, r + a), Rat(1));
    };
    for (const RootVector& alpha : alg.roots) alg.basis.push_back(root_vec(alpha, false));
    for (const RootVector& alpha : alg.roots) alg.basis.push_back(root_vec(alpha, true));
    for (const MatQ& x : alg.basis)
      check_internal(symplectic_ok(x, r), "sp basis element must satisfy X^T J + J X = 0");
  }
  check_internal(alg.dim() == spec.dim_g(), "algebra dimension mismatch");

  // Cartan eigenvalues must reproduce the root coordinates exactly.
  const CartanMatrix& cm = cartan_matrix(spec);
  for (size_t a = 0; a < alg.roots.size(); ++a) {
    for (int i = 0; i < r; ++i) {
      MatQ c = commutator(alg.basis[i], alg.basis[alg.pos_index(int(a))]);
      long eig = 0;
      for (int t = 0; t < r; ++t) eig += cm.at(i, t) * alg.roots[a].coeffs[t];
      MatQ expect = alg.basis[alg.pos_index(int(a))];
      for (Rat& x : expect.a) x *= eig;
      check_internal(c.a == expect.a, "Cartan eigenvalue mismatch on a root vector");
    }
  }

  // Structure constants: [X_alpha, X_beta] lies in a single root space or
  // in the Cartan, so expansion needs no general linear solve.
  int dim = alg.dim();
  auto root_space_index = [&](const IVec& coeffs) {
    for (size_t a = 0; a < alg.roots.size(); ++a)
      if (alg.roots[a].coeffs == coeffs) return alg.pos_index(int(a));
    IVec negc = coeffs;
    for (long& c : negc) c = -c;
    for (size_t a = 0; a < alg.roots.size(); ++a)
      if (alg.roots[a].coeffs == negc) return alg.neg_index(int(a));
    return -1;
  };
  auto root_coeffs_of = [&](int idx) -> IVec {
    if (idx < r) return IVec(r, 0);
    int a = idx - r;
    bool neg = a >= int(alg.roots.size());
    if (neg) a -= int(alg.roots.size());
    IVec c = alg.roots[a].coeffs;
    if (neg)
      for (long& x : c) x = -x;
    return c;
  };
  alg.bracket_table.assign(dim, std::vector<std::vector<std::pair<int, Rat>>>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      MatQ c = commutator(alg.basis[i], alg.basis[j]);
      std::vector<std::pair<int, Rat>> expansion;
      if (!c.is_zero()) {
        IVec wsum = root_coeffs_of(i);
        IVec wj = root_coeffs_of(j);
        for (int t = 0; t < r; ++t) wsum[t] += wj[t];
        bool cartan = std::all_of(wsum.begin(), wsum.end(), [](long x) { return x == 0; });
        if (cartan) {
          // expand a diagonal matrix over h_1..h_r via partial sums
          QVec coef(r, Rat(0));
          Rat acc(0);
          for (int t = 0; t < r; ++t) {
            acc += c.at(t, t);
            coef[t] = acc;
          }
          MatQ rebuilt(n, n);
          for (int t = 0; t < r; ++t)
            if (coef[t] != 0) rebuilt = mat_add(rebuilt, alg.basis[t], coef[t]);
          check_internal(rebuilt.a == c.a, "Cartan-part expansion failed");
          for (int t = 0; t < r; ++t)
            if (coef[t] != 0) expansion.push_back({t, coef[t]});
        } else {
          int target = root_space_index(wsum);
          check_internal(target >= 0, "bracket landed outside all root spaces");
          const MatQ& base = alg.basis[target];
          Rat scale(0);
          for (size_t t = 0; t < base.a.size(); ++t)
            if (base.a[t] != 0) {
              scale = c.a[t] / base.a[t];
              break;
            }
          MatQ expect = base;
          for (Rat& x : expect.a) x *= scale;
          check_internal(expect.a == c.a, "bracket is not a root-vector multiple");
          expansion.push_back({target, scale});
        }
      }
      alg.bracket_table[i][j] = std::move(expansion);
    }
  }
  return alg;
}

// ---------------------------------------------------------------------------

namespace {

using Term = std::pair<long, Rat>;  // target basis element index, coefficient

struct BlockKey {
  IVec w;
  bool operator<(const BlockKey& o) const { return w < o.w; }
};

}  // namespace

struct HomologyOracle::Impl {
  GradingInfo grading;
  RepKind rep;
  MatrixAlgebra alg;
  int rep_dim = 0;
  int pdim = 0;

  // generator data, indexed by algebra basis index
  std::vector<std::vector<std::vector<Term>>> rep_act;  // [gen][m] -> terms
  std::vector<IVec> rep_weight;                          // per rep basis vector
  std::vector<long> rep_grade;                           // grading-element degree
  std::vector<int> pplus_gen;      // p_+ position -> algebra basis index
  std::vector<int> pplus_pos_of;   // algebra basis index -> p_+ position or -1
  std::vector<IVec> pplus_weight;  // fundamental coords per p_+ root

  struct Degree {
    bool built = false;
    ChainSpace cs;
    std::unordered_map<long, long> index;          // encoded (mask, m) -> element
    std::map<IVec, std::vector<long>> blocks;      // weight -> elements
    std::unordered_map<long, int> pos_in_block;    // element -> position
  };
  mutable std::vector<Degree> degrees;

  struct ImageData {
    MatQ m;         // columns: dstar of the degree-(k+1) block elements
    int rank = 0;
    MatQ leftnull;  // rows annihilate the column span
  };
  mutable std::map<std::pair<int, IVec>, ImageData> image_cache;

  long encode(const std::vector<int>& subset, int m) const {
    long mask = 0;
    for (int s : subset) mask |= 1L << s;
    return mask * rep_dim + m;
  }

  Impl(const GradingInfo& g, RepKind r) : grading(g), rep(r), alg(build_algebra(g.spec)) {
    pdim = int(g.pplus_idx.size());
    int dim = alg.dim();
    const CartanMatrix& cm = cartan_matrix(g.spec);
    int rank = g.spec.rank;

    pplus_gen.resize(pdim);
    pplus_pos_of.assign(dim, -1);
    for (int p = 0; p < pdim; ++p) {
      const RootVector& alpha = g.delta_plus_pplus[p];
      int idx = -1;
      for (size_t a = 0; a < alg.roots.size(); ++a)
        if (alg.roots[a] == alpha) idx = alg.pos_index(int(a));
      check_internal(idx >= 0, "p_+ root missing from algebra");
      pplus_gen[p] = idx;
      pplus_pos_of[idx] = p;
      IVec w(rank, 0);
      for (int i = 0; i < rank; ++i)
        for (int t = 0; t < rank; ++t) w[i] += cm.at(i, t) * alpha.coeffs[t];
      pplus_weight.push_back(std::move(w));
    }

    if (rep == RepKind::Adjoint) {
      rep_dim = dim;
      rep_act.assign(dim, {});
      for (int gen = 0; gen < dim; ++gen) {
        rep_act[gen].resize(dim);
        for (int m = 0; m < dim; ++m)
          for (const auto& [t, c] : alg.bracket(gen, m))
            rep_act[gen][m].push_back({t, c});
      }
      rep_weight.assign(dim, IVec(rank, 0));
      rep_grade.assign(dim, 0);
      for (size_t a = 0; a < alg.roots.size(); ++a) {
        IVec w(rank, 0);
        for (int i = 0; i < rank; ++i)
          for (int t = 0; t < rank; ++t) w[i] += cm.at(i, t) * alg.roots[a].coeffs[t];
        IVec nw = w;
        for (long& x : nw) x = -x;
        rep_weight[alg.pos_index(int(a))] = w;
        rep_weight[alg.neg_index(int(a))] = nw;
        long h = grading.height_of(alg.roots[a]);
        rep_grade[alg.pos_index(int(a))] = h;
        rep_grade[alg.neg_index(int(a))] = -h;
      }
    } else {
      // dual of the defining representation: rho(X) = -X^T
      rep_dim = alg.nmat;
      rep_act.assign(dim, {});
      for (int gen = 0; gen < dim; ++gen) {
        rep_act[gen].resize(rep_dim);
        const MatQ& x = alg.basis[gen];
        for (int m = 0; m < rep_dim; ++m)
          for (int t = 0; t < rep_dim; ++t)
            if (x.at(m, t) != 0) rep_act[gen][m].push_back({t, -x.at(m, t)});
      }
      rep_weight.assign(rep_dim, IVec(rank, 0));
      rep_grade.assign(rep_dim, 0);
      for (int m = 0; m < rep_dim; ++m)
        for (int i = 0; i < rank; ++i)
          rep_weight[m][i] = to_long(-alg.basis[i].at(m, m));
    }
    degrees.resize(pdim + 2);
  }

  const Degree& degree(int k) const {
    check_internal(k >= 0 && k <= pdim + 1, "chain degree out of range");
    Degree& d = degrees[k];
    if (d.built) return d;
    d.cs.degree = k;
    if (k <= pdim) {
      // all ascending k-subsets of the p_+ roots, tensor the rep basis
      std::vector<int> subset(k);
      for (int i = 0; i < k; ++i) subset[i] = i;
      for (;;) {
        IVec base(grading.spec.rank, 0);
        for (int s : subset)
          for (int i = 0; i < grading.spec.rank; ++i) base[i] += pplus_weight[s][i];
        for (int m = 0; m < rep_dim; ++m) {
          IVec w = base;
          for (int i = 0; i < grading.spec.rank; ++i) w[i] += rep_weight[m][i];
          long id = long(d.cs.basis.size());
          d.index[encode(subset, m)] = id;
          d.cs.basis.push_back({subset, m});
          d.cs.weights.push_back(w);
          d.pos_in_block[id] = int(d.blocks[w].size());
          d.blocks[w].push_back(id);
        }
        if (k == 0) break;
        int t = k - 1;
        while (t >= 0 && subset[t] == pdim - k + t) --t;
        if (t < 0) break;
        ++subset[t];
        for (int u = t + 1; u < k; ++u) subset[u] = subset[u - 1] + 1;
      }
    }
    d.built = true;
    return d;
  }

  // dstar of one basis element of degree k, as terms in degree k-1.
  std::vector<Term> dstar(int k, long elem) const {
    const Degree& dk = degree(k);
    const Degree& dk1 = degree(k - 1);
    const auto& [subset, m] = dk.cs.basis[elem];
    std::vector<Term> out;
    // action part: (-1)^{i+1} (omit Z_i) (x) Z_i . v
    for (int i = 0; i < k; ++i) {
      std::vector<int> rest = subset;
      rest.erase(rest.begin() + i);
      int sgn = (i % 2 == 0) ? -1 : 1;
      for (const auto& [m2, c] : rep_act[pplus_gen[subset[i]]][m]) {
        auto it = dk1.index.find(encode(rest, m2));
        check_internal(it != dk1.index.end(), "dstar action target missing");
        out.push_back({it->second, Rat(sgn) * c});
      }
    }
    // bracket part: (-1)^{i+j} [Z_i, Z_j] wedge (omit both) (x) v
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int sgn = ((i + j) % 2 == 0) ? 1 : -1;
        std::vector<int> rest = subset;
        rest.erase(rest.begin() + j);
        rest.erase(rest.begin() + i);
        for (const auto& [t, c] : alg.bracket(pplus_gen[subset[i]], pplus_gen[subset[j]])) {
          int u = pplus_pos_of[t];
          check_internal(u >= 0, "bracket of p_+ roots must stay in p_+");
          if (std::binary_search(rest.begin(), rest.end(), u)) continue;
          std::vector<int> merged = rest;
          auto pos = std::lower_bound(merged.begin(), merged.end(), u);
          int moves = int(pos - merged.begin());
          merged.insert(pos, u);
          int msgn = (moves % 2 == 0) ? 1 : -1;
          auto it = dk1.index.find(encode(merged, m));
          check_internal(it != dk1.index.end(), "dstar bracket target missing");
          out.push_back({it->second, Rat(sgn * msgn) * c});
        }
      }
    // combine duplicates
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    for (const Term& t : out) {
      if (!merged.empty() && merged.back().first == t.first)
        merged.back().second += t.second;
      else
        merged.push_back(t);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.second == 0; }),
                 merged.end());
    return merged;
  }

  // action of an algebra generator on a chain basis element (derivation)
  std::vector<Term> gen_act(int gen, int k, long elem) const {
    const Degree& dk = degree(k);
    const auto& [subset, m] = dk.cs.basis[elem];
    std::vector<Term> out;
    for (const auto& [m2, c] : rep_act[gen][m]) {
      auto it = dk.index.find(encode(subset, m2));
      check_internal(it != dk.index.end(), "gen action target missing");
      out.push_back({it->second, c});
    }
    for (int i = 0; i < k; ++i) {
      for (const auto& [t, c] : alg.bracket(gen, pplus_gen[subset[i]])) {
        int u = pplus_pos_of[t];
        check_internal(u >= 0, "g_0 action must preserve p_+");
        std::vector<int> rest = subset;
        rest.erase(rest.begin() + i);
        if (std::binary_search(rest.begin(), rest.end(), u)) continue;
        auto pos = std::lower_bound(rest.begin(), rest.end(), u);
        int moved = int(pos - rest.begin());
        rest.insert(pos, u);
        // the replacement keeps slot order up to the move distance
        int sgn = ((i + moved) % 2 == 0) ? 1 : -1;
        auto it = dk.index.find(encode(rest, m));
        check_internal(it != dk.index.end(), "gen action wedge target missing");
        out.push_back({it->second, Rat(sgn) * c});
      }
    }
    return out;
  }

  // block matrix of dstar_k at one weight: rows C_{k-1}(w), cols C_k(w)
  MatQ block_matrix(int k, const IVec& w) const {
    const Degree& dk = degree(k);
    const Degree& dk1 = degree(k - 1);
    auto itc = dk.blocks.find(w);
    std::vector<long> cols = itc == dk.blocks.end() ? std::vector<long>{} : itc->second;
    auto itr = dk1.blocks.find(w);
    long nrows = itr == dk1.blocks.end() ? 0 : long(itr->second.size());
    MatQ mat(int(nrows), int(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (const Term& t : dstar(k, cols[j])) {
        auto pos = dk1.pos_in_block.find(t.first);
        check_internal(pos != dk1.pos_in_block.end(), "dstar changed the weight block");
        mat.at(pos->second, int(j)) = t.second;
      }
    return mat;
  }

  const ImageData& image(int k1, const IVec& w) const {
    // image of dstar_{k1} inside C_{k1-1}(w)
    auto key = std::make_pair(k1, w);
    auto it = image_cache.find(key);
    if (it != image_cache.end()) return it->second;
    ImageData data;
    data.m = block_matrix(k1, w);
    data.rank = rank_of(data.m);
    data.leftnull = left_nullspace(data.m);
    return image_cache.emplace(key, std::move(data)).first->second;
  }
};

HomologyOracle::HomologyOracle(const GradingInfo& grading, RepKind rep)
    : impl_(std::make_shared<Impl>(grading, rep)) {}

const GradingInfo& HomologyOracle::grading() const { return impl_->grading; }
const MatrixAlgebra& HomologyOracle::algebra() const { return impl_->alg; }
int HomologyOracle::pplus_dim() const { return impl_->pdim; }
int HomologyOracle::rep_dim() const { return impl_->rep_dim; }

ChainSpace HomologyOracle::chain_space(int k) const { return impl_->degree(k).cs; }

LinearMapQ HomologyOracle::codifferential_dense(int k) const {
  if (k < 0 || k > impl_->pdim)
    throw DomainError("codifferential: degree out of range");
  const auto& dk = impl_->degree(k);
  long rows = k == 0 ? 0 : impl_->degree(k - 1).cs.dim();
  long cols = dk.cs.dim();
  if (rows * cols > 4'000'000)
    throw ConfigError("codifferential: dense matrix too large; use homology_dims");
  LinearMapQ map;
  map.mat = MatQ(int(rows), int(cols));
  map.source = "Lambda^" + std::to_string(k) + " p_+ (x) V";
  map.target = "Lambda^" + std::to_string(k - 1) + " p_+ (x) V";
  if (k == 0) return map;
  for (long j = 0; j < cols; ++j)
    for (const auto& [t, c] : impl_->dstar(k, j)) map.mat.at(int(t), int(j)) = c;
  return map;
}

long HomologyOracle::homology_dim_at(int k) const {
  if (k < 0 || k > impl_->pdim) throw DomainError("homology degree out of range");
  long ranks[2] = {0, 0};
  for (int t = 0; t < 2; ++t) {
    int kk = k + t;
    if (kk == 0 || kk > impl_->pdim) continue;
    const auto& dk = impl_->degree(kk);
    for (const auto& [w, elems] : dk.blocks) ranks[t] += rank_of(impl_->block_matrix(kk, w));
  }
  return impl_->degree(k).cs.dim() - ranks[0] - ranks[1];
}

std::vector<long> HomologyOracle::homology_dims() const {
  int P = impl_->pdim;
  if ((1L << P) * impl_->rep_dim > 8'000'000)
    throw ConfigError("homology_dims: standard complex too large for this grading");
  std::vector<long> ranks(P + 2, 0);
  for (int k = 1; k <= P; ++k) {
    const auto& dk = impl_->degree(k);
    for (const auto& [w, elems] : dk.blocks) ranks[k] += rank_of(impl_->block_matrix(k, w));
  }
  std::vector<long> h(P + 1, 0);
  for (int k = 0; k <= P; ++k) h[k] = impl_->degree(k).cs.dim() - ranks[k] - ranks[k + 1];
  return h;
}

namespace {

// antidominant representative under the g_0 Weyl group
Weight g0_antidominant(const GradingInfo& g, Weight mu) {
  const CartanMatrix& cm = cartan_matrix(g.spec);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int node : g0_simple_nodes(g)) {
      if (mu.fund[node - 1] > 0) {
        Rat m = mu.fund[node - 1];
        for (int i = 0; i < g.spec.rank; ++i) mu.fund[i] -= m * cm.at(i, node - 1);
        moved = true;
      }
    }
  }
  return mu;
}

Weight dual_label_from_highest(const GradingInfo& g, const Weight& hw) {
  Weight low = g0_antidominant(g, hw);
  for (Rat& c : low.fund) c = -c;
  return low;
}

}  // namespace

std::vector<std::pair<Weight, int>> HomologyOracle::harmonic_labels(int k) const {
  const auto& impl = *impl_;
  if (k < 0 || k > impl.pdim) throw DomainError("harmonic_labels: degree out of range");
  const auto& dk = impl.degree(k);
  int rank = impl.grading.spec.rank;
  std::vector<int> raising = g0_simple_nodes(impl.grading);

  std::vector<std::pair<Weight, int>> found;
  for (const auto& [w, elems] : dk.blocks) {
    MatQ K = k == 0 ? MatQ::identity(int(elems.size()))
                    : nullspace(impl.block_matrix(k, w));
    if (K.cols == 0) continue;
    const auto& img = impl.image(k + 1, w);
    // highest-weight vectors: kernel classes killed by every simple raising
    // operator of g_0, tested modulo the image one weight up
    std::vector<MatQ> constraints;
    for (int node : raising) {
      int gen = -1;
      for (size_t a = 0; a < impl.alg.roots.size(); ++a) {
        if (impl.alg.roots[a].height() == 1 && impl.alg.roots[a].coeffs[node - 1] == 1)
          gen = impl.alg.pos_index(int(a));
      }
      check_internal(gen >= 0, "missing simple raising generator");
      IVec wup = w;
      for (int i = 0; i < rank; ++i) wup[i] += cartan_matrix(impl.grading.spec).at(i, node - 1);
      auto itup = dk.blocks.find(wup);
      if (itup == dk.blocks.end()) continue;  // action is forced to vanish
      const std::vector<long>& target = itup->second;
      // R: action matrix block_w -> block_wup
      MatQ R(int(target.size()), int(elems.size()));
      for (size_t j = 0; j < elems.size(); ++j)
        for (const auto& [t, c] : impl.gen_act(gen, k, elems[j])) {
          check_internal(dk.cs.weights[t] == wup, "raising left the expected block");
          R.at(dk.pos_in_block.at(t), int(j)) = c;
        }
      const auto& imgup = impl.image(k + 1, wup);
      MatQ cond = imgup.leftnull * (R * K);
      if (cond.rows > 0) constraints.push_back(std::move(cond));
    }
    int sdim;
    if (constraints.empty()) {
      sdim = K.cols;
    } else {
      MatQ G = constraints[0];
      for (size_t i = 1; i < constraints.size(); ++i) G = vstack(G, constraints[i]);
      sdim = K.cols - rank_of(G);
    }
    check_internal(sdim >= img.rank, "image escaped the highest-weight space");
    int mult = sdim - img.rank;
    if (mult > 0) {
      Weight hw{to_qvec(w)};
      found.push_back({dual_label_from_highest(impl.grading, hw), mult});
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<std::pair<Weight, HomologyOracle::H2Class>>
HomologyOracle::h2_component_classes() const {
  const auto& impl = *impl_;
  check_internal(impl.rep == RepKind::Adjoint, "component classes need the adjoint module");
  const int k = 2;
  const auto& dk = impl.degree(k);
  std::vector<std::pair<Weight, H2Class>> out;
  for (const auto& [w, elems] : dk.blocks) {
    MatQ K = nullspace(impl.block_matrix(k, w));
    if (K.cols == 0) continue;
    const auto& img = impl.image(k + 1, w);
    // recompute the highest-weight space at this weight
    std::vector<int> raising = g0_simple_nodes(impl.grading);
    std::vector<MatQ> constraints;
    for (int node : raising) {
      int gen = -1;
      for (size_t a = 0; a < impl.alg.roots.size(); ++a)
        if (impl.alg.roots[a].height() == 1 && impl.alg.roots[a].coeffs[node - 1] == 1)
          gen = impl.alg.pos_index(int(a));
      IVec wup = w;
      for (int i = 0; i < impl.grading.spec.rank; ++i)
        wup[i] += cartan_matrix(impl.grading.spec).at(i, node - 1);
      auto itup = dk.blocks.find(wup);
      if (itup == dk.blocks.end()) continue;
      MatQ R(int(itup->second.size()), int(elems.size()));
      for (size_t j = 0; j < elems.size(); ++j)
        for (const auto& [t, c] : impl.gen_act(gen, k, elems[j])) {
          check_internal(dk.cs.weights[t] == wup, "raising left the expected block");
          R.at(dk.pos_in_block.at(t), int(j)) = c;
        }
      const auto& imgup = impl.image(k + 1, wup);
      MatQ cond = imgup.leftnull * (R * K);
      if (cond.rows > 0) constraints.push_back(std::move(cond));
    }
    MatQ S;  // columns span the highest-weight solution space, in K coords
    if (constraints.empty()) {
      S = MatQ::identity(K.cols);
    } else {
      MatQ G = constraints[0];
      for (size_t i = 1; i < constraints.size(); ++i) G = vstack(G, constraints[i]);
      S = nullspace(G);
    }
    int mult = S.cols - img.rank;
    if (mult <= 0) continue;
    check_internal(mult == 1, "component multiplicities above one are unexpected here");
    // a highest-weight vector not inside the image
    QVec v;
    for (int j = 0; j < S.cols; ++j) {
      QVec cand = K.apply(S.col(j));
      if (!in_column_span(img.m, cand)) {
        v = std::move(cand);
        break;
      }
    }
    check_internal(!v.empty(), "no representative outside the image");
    // torsion: some representative v - img y has its module part in the
    // negative grading components; restrict to the non-negative rows
    std::vector<int> nn_rows;
    for (size_t t = 0; t < elems.size(); ++t) {
      int m = dk.cs.basis[elems[t]].second;
      if (impl.rep_grade[m] >= 0) nn_rows.push_back(int(t));
    }
    MatQ pm(int(nn_rows.size()), img.m.cols);
    QVec pv(nn_rows.size());
    for (size_t t = 0; t < nn_rows.size(); ++t) {
      pv[t] = v[nn_rows[t]];
      for (int j = 0; j < img.m.cols; ++j) pm.at(int(t), j) = img.m.at(nn_rows[t], j);
    }
    bool torsion = in_column_span(pm, pv);
    Weight hw{to_qvec(w)};
    out.push_back({dual_label_from_highest(impl.grading, hw),
                   torsion ? H2Class::Torsion : H2Class::Curvature});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

LinearMapQ codifferential(const GradingInfo& g, RepKind rep, int k) {
  return HomologyOracle(g, rep).codifferential_dense(k);
}

std::vector<long> homology_dims(const GradingInfo& g, RepKind rep) {
  return HomologyOracle(g, rep).homology_dims();
}

std::vector<std::pair<Weight, int>> harmonic_highest_weights(const GradingInfo& g,
                                                             RepKind rep, int k) {
  return HomologyOracle(g, rep).harmonic_labels(k);
}

std::vector<std::pair<Weight, HomologyOracle::H2Class>> component_homogeneity(
    const GradingInfo& g) {
  return HomologyOracle(g, RepKind::Adjoint).h2_component_classes();
}

}  // namespace bgg
