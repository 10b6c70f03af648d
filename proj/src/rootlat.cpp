#include "bgg/rootlat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "bgg/errors.hpp"
#include "bgg/matq.hpp"

namespace bgg {

namespace {

constexpr int kMaxRank = 8;

std::mutex cache_mutex;

std::pair<int, int> key_of(const CartanSpec& spec) {
  return {spec.series == Series::A ? 0 : 1, spec.rank};
}

// Graded lexicographic: by height, then by descending coefficient order,
// so A_2 lists alpha_1, alpha_2, alpha_1+alpha_2.
bool grlex_less(const RootVector& x, const RootVector& y) {
  long hx = x.height(), hy = y.height();
  if (hx != hy) return hx < hy;
  return x.coeffs > y.coeffs;
}

std::vector<RootVector> compute_positive_roots(const CartanSpec& spec) {
  const CartanMatrix& cm = cartan_matrix(spec);
  int r = spec.rank;
  std::set<IVec> found;
  std::vector<IVec> frontier;
  for (int i = 0; i < r; ++i) {
    IVec a(r, 0);
    a[i] = 1;
    found.insert(a);
    frontier.push_back(a);
  }
  // Closure by root strings: alpha + alpha_j is a root iff
  // q - <alpha, alpha_j^vee> >= 1 with q the largest t such that
  // alpha - t alpha_j is a root.
  while (!frontier.empty()) {
    std::vector<IVec> next;
    for (const IVec& a : frontier) {
      for (int j = 0; j < r; ++j) {
        long pair = 0;
        for (int i = 0; i < r; ++i) pair += cm.at(j, i) * a[i];
        long q = 0;
        IVec down = a;
        for (;;) {
          down[j] -= 1;
          bool neg_simple = false;
          if (down[j] < 0) {
            // only -alpha_j itself can have a negative entry
            IVec negated = down;
            for (long& c : negated) c = -c;
            neg_simple = found.count(negated) > 0;
          }
          if (down[j] >= 0 ? found.count(down) > 0 : neg_simple)
            ++q;
          else
            break;
        }
        if (q - pair >= 1) {
          IVec up = a;
          up[j] += 1;
          if (found.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootVector> out;
  out.reserve(found.size());
  for (const IVec& a : found) out.push_back(RootVector{a});
  std::sort(out.begin(), out.end(), grlex_less);

  size_t expected = spec.series == Series::A
                        ? size_t(r) * (r + 1) / 2
                        : size_t(r) * r;
  check_internal(out.size() == expected, "positive root count mismatch for " + spec.name());
  return out;
}

}  // namespace

CartanSpec::CartanSpec(Series s, int r) : series(s), rank(r) {
  if (r < 1) throw ConfigError("rank must be positive");
  if (s == Series::C && r < 2) throw ConfigError("series C needs rank >= 2");
  if (r > kMaxRank) throw ConfigError("rank capped at " + std::to_string(kMaxRank));
}

long CartanSpec::dim_g() const {
  long r = rank;
  return series == Series::A ? r * (r + 2) : r * (2 * r + 1);
}

std::string CartanSpec::name() const {
  return (series == Series::A ? "A" : "C") + std::to_string(rank);
}

long RootVector::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0L);
}

bool Weight::integral() const {
  for (const Rat& c : fund)
    if (!is_integer(c)) return false;
  return true;
}

bool Weight::is_zero() const {
  for (const Rat& c : fund)
    if (c != 0) return false;
  return true;
}

bool Weight::operator<(const Weight& o) const {
  check_internal(fund.size() == o.fund.size(), "weight rank mismatch");
  for (size_t i = 0; i < fund.size(); ++i) {
    int c = cmp(fund[i], o.fund[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Weight Weight::operator+(const Weight& o) const {
  check_internal(fund.size() == o.fund.size(), "weight rank mismatch");
  Weight out = *this;
  for (size_t i = 0; i < fund.size(); ++i) out.fund[i] += o.fund[i];
  return out;
}

Weight Weight::operator-(const Weight& o) const {
  check_internal(fund.size() == o.fund.size(), "weight rank mismatch");
  Weight out = *this;
  for (size_t i = 0; i < fund.size(); ++i) out.fund[i] -= o.fund[i];
  return out;
}

const CartanMatrix& cartan_matrix(const CartanSpec& spec) {
  static std::map<std::pair<int, int>, CartanMatrix> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key_of(spec));
  if (it != cache.end()) return it->second;

  int r = spec.rank;
  CartanMatrix cm;
  cm.rank = r;
  cm.entry.assign(r, IVec(r, 0));
  for (int i = 0; i < r; ++i) cm.entry[i][i] = 2;
  for (int i = 0; i + 1 < r; ++i) {
    cm.entry[i][i + 1] = -1;
    cm.entry[i + 1][i] = -1;
  }
  if (spec.series == Series::C && r >= 2) {
    // alpha_rank is the long root: <alpha_r, alpha_{r-1}^vee> = -2.
    cm.entry[r - 2][r - 1] = -2;
    cm.entry[r - 1][r - 2] = -1;
  }
  return cache.emplace(key_of(spec), std::move(cm)).first->second;
}

const IVec& symmetrizers(const CartanSpec& spec) {
  static std::map<std::pair<int, int>, IVec> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(key_of(spec));
  if (it != cache.end()) return it->second;
  IVec d(spec.rank, 1);
  if (spec.series == Series::C) d[spec.rank - 1] = 2;
  return cache.emplace(key_of(spec), std::move(d)).first->second;
}

const std::vector<RootVector>& positive_roots(const CartanSpec& spec) {
  static std::map<std::pair<int, int>, std::vector<RootVector>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key_of(spec));
    if (it != cache.end()) return it->second;
  }
  std::vector<RootVector> roots = compute_positive_roots(spec);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key_of(spec), std::move(roots)).first->second;
}

bool is_positive_root(const CartanSpec& spec, const RootVector& alpha) {
  const auto& roots = positive_roots(spec);
  return std::find(roots.begin(), roots.end(), alpha) != roots.end();
}

bool is_root(const CartanSpec& spec, const RootVector& alpha) {
  if (is_positive_root(spec, alpha)) return true;
  RootVector neg = alpha;
  for (long& c : neg.coeffs) c = -c;
  return is_positive_root(spec, neg);
}

Rat cartan_pairing(const CartanSpec& spec, const Weight& mu,
                   const RootVector& alpha) {
  if (!is_root(spec, alpha)) throw DomainError("cartan_pairing: not a root");
  if (int(mu.fund.size()) != spec.rank)
    throw DomainError("cartan_pairing: weight rank mismatch");
  const CartanMatrix& cm = cartan_matrix(spec);
  const IVec& d = symmetrizers(spec);
  // <mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha) with
  // (mu, alpha_j) = d_j m_j and (alpha_i, alpha_j) = d_j <alpha_i, alpha_j^vee>.
  Rat num = 0;
  for (int j = 0; j < spec.rank; ++j)
    if (alpha.coeffs[j] != 0) num += Rat(alpha.coeffs[j] * d[j]) * mu.fund[j];
  long den = 0;
  for (int i = 0; i < spec.rank; ++i)
    for (int j = 0; j < spec.rank; ++j)
      den += alpha.coeffs[i] * alpha.coeffs[j] * d[j] * cm.at(j, i);
  check_internal(den != 0, "cartan_pairing: null root length");
  return 2 * num / den;
}

long root_pairing(const CartanSpec& spec, const RootVector& alpha,
                  const RootVector& beta) {
  return to_long(cartan_pairing(spec, weight_from_root(spec, alpha), beta));
}

QVec to_simple_root_coords(const CartanSpec& spec, const Weight& mu) {
  const CartanMatrix& cm = cartan_matrix(spec);
  MatQ m(spec.rank, spec.rank);
  for (int i = 0; i < spec.rank; ++i)
    for (int j = 0; j < spec.rank; ++j) m.at(i, j) = cm.at(i, j);
  QVec coords;
  check_internal(solve(m, mu.fund, &coords), "Cartan matrix is invertible");
  return coords;
}

Weight weight_from_simple_coords(const CartanSpec& spec, const QVec& coords) {
  const CartanMatrix& cm = cartan_matrix(spec);
  Weight mu;
  mu.fund.assign(spec.rank, Rat(0));
  for (int i = 0; i < spec.rank; ++i)
    for (int j = 0; j < spec.rank; ++j)
      if (coords[j] != 0) mu.fund[i] += Rat(cm.at(i, j)) * coords[j];
  return mu;
}

Weight weight_from_root(const CartanSpec& spec, const RootVector& alpha) {
  return weight_from_simple_coords(spec, to_qvec(alpha.coeffs));
}

Weight weight_from_fund(QVec fund) { return Weight{std::move(fund)}; }

Weight weyl_vector(const CartanSpec& spec) {
  return Weight{QVec(spec.rank, Rat(1))};
}

Weight zero_weight(int rank) { return Weight{QVec(rank, Rat(0))}; }

QVec to_euclidean(const CartanSpec& spec, const RootVector& alpha) {
  int r = spec.rank;
  const IVec& c = alpha.coeffs;
  QVec e;
  if (spec.series == Series::A) {
    e.assign(r + 1, Rat(0));
    e[0] = c[0];
    for (int i = 1; i < r; ++i) e[i] = c[i] - c[i - 1];
    e[r] = -c[r - 1];
  } else {
    e.assign(r, Rat(0));
    e[0] = c[0];
    for (int i = 1; i + 1 < r; ++i) e[i] = c[i] - c[i - 1];
    if (r >= 2) e[r - 1] = 2 * c[r - 1] - c[r - 2];
  }
  return e;
}

std::string root_name(const CartanSpec& spec, const RootVector& alpha) {
  if (!is_positive_root(spec, alpha))
    throw DomainError("root_name: not a positive root");
  QVec e = to_euclidean(spec, alpha);
  auto fmt = [](const char* kind, int i, int j) {
    return std::string(kind) + "^{" + std::to_string(i) + "," +
           std::to_string(j) + "}";
  };
  int plus1 = -1, plus2 = -1, minus = -1, two = -1;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 1) (plus1 < 0 ? plus1 : plus2) = int(i);
    if (e[i] == -1) minus = int(i);
    if (e[i] == 2) two = int(i);
  }
  if (spec.series == Series::A) {
    // e_a - e_b = beta^{a, b-1}
    return fmt("beta", plus1 + 1, minus);
  }
  int r = spec.rank;
  if (minus >= 0) return fmt("beta", plus1 + 1, minus);             // e_a - e_b
  if (two == r - 1) return fmt("beta", r, r);                       // 2e_r
  if (two >= 0) return fmt("gamma", two + 1, two + 1);              // 2e_a
  if (plus2 == r - 1) return fmt("beta", plus1 + 1, r);             // e_a + e_r
  return fmt("gamma", plus1 + 1, plus2 + 1);                        // e_a + e_b
}

std::string weight_string(const Weight& mu) {
  std::string s;
  for (size_t i = 0; i < mu.fund.size(); ++i) {
    const Rat& c = mu.fund[i];
    if (c == 0) continue;
    if (c > 0 && !s.empty()) s += "+";
    if (c == -1)
      s += "-";
    else if (c != 1)
      s += rat_string(c);
    s += "l" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace bgg
