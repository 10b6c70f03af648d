#include "bgg/vanish.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bgg/errors.hpp"

namespace bgg {

namespace {

constexpr size_t kSupportCap = 200000;
constexpr size_t kSearchCap = 2000000;

struct MembershipSearcher {
  std::vector<IVec> gens;
  std::set<IVec> failed;
  std::vector<long> counts;

  explicit MembershipSearcher(std::vector<IVec> g) : gens(std::move(g)) {
    counts.assign(gens.size(), 0);
  }

  bool member(const IVec& t, std::vector<long>* combo) {
    std::fill(counts.begin(), counts.end(), 0);
    for (long c : t)
      if (c < 0) return false;
    if (!rec(t)) return false;
    if (combo) *combo = counts;
    return true;
  }

 private:
  bool rec(const IVec& t) {
    bool zero = true;
    for (long c : t)
      if (c != 0) {
        zero = false;
        break;
      }
    if (zero) return true;
    if (failed.count(t)) return false;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      bool fits = true;
      for (size_t i = 0; i < t.size(); ++i)
        if (gens[gi][i] > t[i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      IVec rest = t;
      for (size_t i = 0; i < t.size(); ++i) rest[i] -= gens[gi][i];
      ++counts[gi];
      if (rec(rest)) return true;
      --counts[gi];
    }
    if (failed.size() >= kSearchCap)
      throw ConfigError("membership search exceeded its state cap");
    failed.insert(t);
    return false;
  }
};

IVec integral_root_coords(const CartanSpec& spec, const Weight& mu) {
  return to_ivec(to_simple_root_coords(spec, mu));
}

struct PairTester {
  const BGGDiagram& d;
  std::vector<IVec> support;       // E_0^* support, simple-root coords
  std::vector<Weight> support_w;   // parallel, as weights
  MembershipSearcher searcher;

  PairTester(const BGGDiagram& diagram, const E0Spec& e0, bool complexify)
      : d(diagram), searcher(gens_of(diagram)) {
    std::set<Weight> labels(e0.components.begin(), e0.components.end());
    if (complexify)
      for (const Weight& w : e0.components)
        labels.insert(conjugate_weight(d.realform, w));
    std::set<Weight> seen;
    for (const Weight& lab : labels)
      for (const Weight& mu : weights_of_irrep(d.graph.grading, lab)) seen.insert(mu);
    for (const Weight& mu : seen) {
      support_w.push_back(mu);
      support.push_back(integral_root_coords(d.spec(), mu));
    }
  }

  static std::vector<IVec> gens_of(const BGGDiagram& diagram) {
    std::vector<IVec> gens;
    for (const RootVector& beta : diagram.graph.grading.delta_plus_pplus)
      gens.push_back(beta.coeffs);
    return gens;
  }

  // Lemma-style membership: is diff a weight of some (x)^i g_- (x) E_0^*?
  std::optional<MembershipWitness> admissible(const Weight& diff) {
    IVec dvec = integral_root_coords(d.spec(), diff);
    for (size_t s = 0; s < support.size(); ++s) {
      IVec t = support[s];
      for (size_t i = 0; i < t.size(); ++i) t[i] -= dvec[i];
      std::vector<long> combo;
      if (searcher.member(t, &combo)) {
        MembershipWitness w;
        w.mu = support_w[s];
        for (size_t gi = 0; gi < combo.size(); ++gi)
          if (combo[gi] > 0)
            w.combo.push_back({d.graph.grading.delta_plus_pplus[gi], combo[gi]});
        return w;
      }
    }
    return std::nullopt;
  }
};

int count_middles(const HasseGraph& g, int source, int target) {
  int middles = 0;
  for (int a : g.out[source]) {
    int m = g.arrows[a].dst;
    if (g.find_arrow(m, target) >= 0) ++middles;
  }
  return middles;
}

int count_class_middles(const BGGDiagram& d, const std::set<std::pair<int, int>>& qarrows,
                        int source_class, int target_class) {
  int middles = 0;
  for (size_t m = 0; m < d.classes.size(); ++m)
    if (qarrows.count({source_class, int(m)}) && qarrows.count({int(m), target_class}))
      ++middles;
  return middles;
}

std::set<std::pair<int, int>> quotient_arrows(const BGGDiagram& d) {
  std::set<std::pair<int, int>> q;
  for (const HasseArrow& a : d.graph.arrows)
    q.insert({d.class_of[a.src], d.class_of[a.dst]});
  return q;
}

bool lambda_self_conjugate(const BGGDiagram& d) {
  return conjugate_weight(d.realform, d.lambda) == d.lambda;
}

Weight adjoint_weight(const CartanSpec& spec) {
  Weight adj = zero_weight(spec.rank);
  if (spec.series == Series::A) {
    adj.fund[0] = 1;
    adj.fund[spec.rank - 1] = 1;
  } else {
    adj.fund[0] = 2;
  }
  return adj;
}

void validate_e0_with(const HasseGraph& graph, const E0Spec& e0) {
  if (e0.components.empty()) throw ConfigError("E0 must contain at least one component");
  const CartanSpec& spec = graph.grading.spec;
  Weight adj = adjoint_weight(spec);
  std::vector<Weight> degree2;
  for (const HasseNode& n : graph.nodes)
    if (n.w.word.size() == 2) degree2.push_back(affine_act(spec, n.w, adj));
  for (const Weight& comp : e0.components)
    if (std::find(degree2.begin(), degree2.end(), comp) == degree2.end())
      throw ConfigError("E0 component " + weight_string(comp) +
                        " is not a degree-2 component of the adjoint diagram");
}

}  // namespace

E0Spec e0_torsion_free_preset(const GradingInfo& g) {
  if (!is_named_family(g))
    throw ConfigError("torsion-free preset needs a recognized diagram family");
  HasseGraph graph = hasse_graph(g);
  int node = graph.node_by_name("w_{1,1}");
  if (node < 0) throw ConfigError("diagram has no H_{1,1} component");
  E0Spec e0;
  e0.components = {affine_act(g.spec, graph.nodes[node].w, adjoint_weight(g.spec))};
  e0.provenance = "preset:torsion-free";
  return e0;
}

void validate_e0(const GradingInfo& g, const E0Spec& e0) {
  validate_e0_with(hasse_graph(g), e0);
}

std::vector<Weight> weights_of_irrep(const GradingInfo& g, const Weight& Lambda) {
  if (!Lambda.integral() || !g.is_p_dominant(Lambda))
    throw DomainError("weights_of_irrep: highest weight must be p-dominant integral");
  std::set<IVec> support;
  std::vector<IVec> queue;
  IVec start = to_ivec(Lambda.fund);
  support.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    IVec mu = queue.back();
    queue.pop_back();
    for (const RootVector& beta : g.delta_plus_g0) {
      long m = to_long(cartan_pairing(g.spec, Weight{to_qvec(mu)}, beta));
      if (m == 0) continue;
      IVec bw = to_ivec(weight_from_root(g.spec, beta).fund);
      long lo = std::min(0L, m), hi = std::max(0L, m);
      for (long t = lo; t <= hi; ++t) {
        if (t == 0) continue;
        IVec nu = mu;
        for (size_t i = 0; i < nu.size(); ++i) nu[i] -= t * bw[i];
        if (support.insert(nu).second) {
          if (support.size() > kSupportCap)
            throw ConfigError("weight support exceeds the size guard");
          queue.push_back(nu);
        }
      }
    }
  }
  std::vector<Weight> out;
  for (const IVec& w : support) out.push_back(Weight{to_qvec(w)});
  return out;
}

VanishVerdict criterion(const BGGDiagram& d, const E0Spec& e0, int source, int target) {
  if (source < 0 || target < 0 || source >= int(d.labels.size()) ||
      target >= int(d.labels.size()))
    throw DomainError("criterion: node out of range");
  if (d.degrees[target] != d.degrees[source] + 2)
    throw DomainError("criterion: target degree must be source degree + 2");
  if (d.realform.flip && lambda_self_conjugate(d))
    throw DomainError("criterion: identified diagram, use criterion_real");
  validate_e0_with(d.graph, e0);
  PairTester tester(d, e0, false);
  VanishVerdict v;
  v.source = source;
  v.target = target;
  v.path_unique = count_middles(d.graph, source, target) == 1;
  auto witness = tester.admissible(d.labels[target] - d.labels[source]);
  if (witness) {
    v.verdict = Verdict::Inconclusive;
    v.witness = std::move(witness);
  } else {
    v.verdict = Verdict::ProvablyZero;
  }
  return v;
}

VanishVerdict criterion_real(const BGGDiagram& d, const E0Spec& e0, int source_class,
                             int target_class) {
  if (!d.realform.flip)
    throw DomainError("criterion_real: needs a real form with nontrivial conjugation");
  if (source_class < 0 || target_class < 0 || source_class >= int(d.classes.size()) ||
      target_class >= int(d.classes.size()))
    throw DomainError("criterion_real: class out of range");
  int s0 = d.classes[source_class][0];
  int t0 = d.classes[target_class][0];
  if (d.degrees[t0] != d.degrees[s0] + 2)
    throw DomainError("criterion_real: target degree must be source degree + 2");
  validate_e0_with(d.graph, e0);
  PairTester tester(d, e0, true);
  Weight l1 = d.labels[s0], l2 = d.labels[t0];
  Weight l1c = conjugate_weight(d.realform, l1), l2c = conjugate_weight(d.realform, l2);
  VanishVerdict v;
  v.source = source_class;
  v.target = target_class;
  v.path_unique =
      count_class_middles(d, quotient_arrows(d), source_class, target_class) == 1;
  v.verdict = Verdict::ProvablyZero;
  for (const Weight& diff : {l2 - l1, l2c - l1, l2 - l1c, l2c - l1c}) {
    auto witness = tester.admissible(diff);
    if (witness) {
      v.verdict = Verdict::Inconclusive;
      v.witness = std::move(witness);
      break;
    }
  }
  return v;
}

namespace {

std::vector<SubcomplexChain> chains_on(
    const std::vector<std::vector<int>>& out_arcs,
    const std::function<bool(int, int)>& pair_valid,
    const std::function<long long(int, int)>& order_of) {
  int n = int(out_arcs.size());
  std::vector<std::vector<int>> in_arcs(n);
  for (int u = 0; u < n; ++u)
    for (int v : out_arcs[u]) in_arcs[v].push_back(u);

  std::vector<SubcomplexChain> result;
  std::vector<int> path;
  std::function<void(void)> extend = [&]() {
    int last = path.back();
    bool extended = false;
    for (int v : out_arcs[last]) {
      if (!pair_valid(path[path.size() - 2], v)) continue;
      path.push_back(v);
      extended = true;
      extend();
      path.pop_back();
    }
    if (extended || path.size() < 3) return;
    for (int u : in_arcs[path[0]])
      if (pair_valid(u, path[1])) return;  // extendable backwards
    SubcomplexChain chain;
    chain.nodes = path;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      chain.orders.push_back(order_of(path[i], path[i + 1]));
    result.push_back(std::move(chain));
  };
  for (int u = 0; u < n; ++u)
    for (int v : out_arcs[u]) {
      path = {u, v};
      extend();
    }
  std::sort(result.begin(), result.end(),
            [](const SubcomplexChain& a, const SubcomplexChain& b) { return a.nodes < b.nodes; });
  return result;
}

}  // namespace

std::vector<SubcomplexChain> find_subcomplexes(const BGGDiagram& d, const E0Spec& e0) {
  // no directed 2-path, no candidate chains
  if (d.graph.max_length < 2) return {};
  validate_e0_with(d.graph, e0);

  bool real_mode = d.realform.flip && lambda_self_conjugate(d);
  if (!real_mode) {
    PairTester tester(d, e0, false);
    std::map<std::pair<int, int>, bool> cache;
    auto pair_valid = [&](int u, int w) {
      auto key = std::make_pair(u, w);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      bool ok = count_middles(d.graph, u, w) == 1 &&
                !tester.admissible(d.labels[w] - d.labels[u]).has_value();
      cache[key] = ok;
      return ok;
    };
    std::vector<std::vector<int>> out_arcs(d.graph.nodes.size());
    for (const HasseArrow& a : d.graph.arrows) out_arcs[a.src].push_back(a.dst);
    auto order_of = [&](int u, int v) {
      return d.orders[d.graph.find_arrow(u, v)];
    };
    return chains_on(out_arcs, pair_valid, order_of);
  }

  PairTester tester(d, e0, true);
  auto qarrows = quotient_arrows(d);
  std::vector<std::vector<int>> out_arcs(d.classes.size());
  for (const auto& [u, v] : qarrows) out_arcs[u].push_back(v);
  std::map<std::pair<int, int>, bool> cache;
  auto pair_valid = [&](int cu, int cw) {
    auto key = std::make_pair(cu, cw);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    bool ok = count_class_middles(d, qarrows, cu, cw) == 1;
    if (ok) {
      int s0 = d.classes[cu][0], t0 = d.classes[cw][0];
      Weight l1 = d.labels[s0], l2 = d.labels[t0];
      Weight l1c = conjugate_weight(d.realform, l1);
      Weight l2c = conjugate_weight(d.realform, l2);
      for (const Weight& diff : {l2 - l1, l2c - l1, l2 - l1c, l2c - l1c})
        if (tester.admissible(diff)) {
          ok = false;
          break;
        }
    }
    cache[key] = ok;
    return ok;
  };
  auto order_of = [&](int cu, int cv) -> long long {
    long long order = -1;
    for (int u : d.classes[cu])
      for (int v : d.classes[cv]) {
        int a = d.graph.find_arrow(u, v);
        if (a < 0) continue;
        check_internal(order < 0 || order == d.orders[a],
                       "conjugate arrows must share their order");
        order = d.orders[a];
      }
    check_internal(order > 0, "missing quotient arrow");
    return order;
  };
  auto chains = chains_on(out_arcs, pair_valid, order_of);
  for (SubcomplexChain& c : chains) c.real_mode = true;
  return chains;
}

bool cone_member(const std::vector<IVec>& gens, const IVec& target,
                 std::vector<long>* combo) {
  for (const IVec& g : gens)
    for (long c : g) check_internal(c >= 0, "cone generators must be nonnegative");
  MembershipSearcher s(gens);
  std::vector<long> counts;
  if (!s.member(target, &counts)) return false;
  if (combo) *combo = counts;
  return true;
}

}  // namespace bgg
