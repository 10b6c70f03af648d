#include "bgg/parabolic.hpp"

#include <algorithm>

#include "bgg/errors.hpp"

namespace bgg {

Crossing::Crossing(std::vector<int> crossed, int rank) : nodes(std::move(crossed)) {
  if (nodes.empty()) throw ConfigError("crossing: at least one node required");
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.front() < 1 || nodes.back() > rank)
    throw ConfigError("crossing: node index out of range");
}

bool Crossing::contains(int node) const {
  return std::binary_search(nodes.begin(), nodes.end(), node);
}

std::string Crossing::text() const {
  std::string s = "{";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nodes[i]);
  }
  return s + "}";
}

long GradingInfo::height_of(const RootVector& alpha) const {
  long h = 0;
  for (int node : crossing.nodes) h += alpha.coeffs[node - 1];
  return h;
}

int GradingInfo::pplus_position(const RootVector& alpha) const {
  for (size_t i = 0; i < delta_plus_pplus.size(); ++i)
    if (delta_plus_pplus[i] == alpha) return int(i);
  return -1;
}

bool GradingInfo::is_p_dominant(const Weight& mu) const {
  for (int i = 1; i <= spec.rank; ++i)
    if (!crossing.contains(i) && mu.fund[i - 1] < 0) return false;
  return true;
}

std::string GradingInfo::text() const { return spec.name() + " x" + crossing.text(); }

GradingInfo grade(const CartanSpec& spec, const Crossing& crossing) {
  GradingInfo g{spec, crossing};
  g.delta_plus = positive_roots(spec);
  g.heights.reserve(g.delta_plus.size());
  for (size_t i = 0; i < g.delta_plus.size(); ++i) {
    long h = g.height_of(g.delta_plus[i]);
    g.heights.push_back(h);
    g.k = int(std::max<long>(g.k, h));
    g.dims[h] += 1;
    g.dims[-h] += 1;
    if (h == 0) {
      g.delta_plus_g0.push_back(g.delta_plus[i]);
      g.g0_idx.push_back(int(i));
    } else {
      g.delta_plus_pplus.push_back(g.delta_plus[i]);
      g.pplus_idx.push_back(int(i));
    }
  }
  // dim g_0 counts the Cartan plus the paired height-zero root spaces.
  g.dims[0] = spec.rank + 2 * long(g.delta_plus_g0.size());
  long total = 0;
  for (auto& [i, d] : g.dims) total += d;
  check_internal(total == spec.dim_g(), "grading dims do not sum to dim g");
  return g;
}

Weight g0_weyl_vector(const GradingInfo& g) {
  Weight sum = zero_weight(g.spec.rank);
  for (const RootVector& alpha : g.delta_plus_g0)
    sum = sum + weight_from_root(g.spec, alpha);
  for (Rat& c : sum.fund) c /= 2;
  return sum;
}

std::vector<int> g0_simple_nodes(const GradingInfo& g) {
  std::vector<int> out;
  for (int i = 1; i <= g.spec.rank; ++i)
    if (!g.crossing.contains(i)) out.push_back(i);
  return out;
}

}  // namespace bgg
