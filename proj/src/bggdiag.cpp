#include "bgg/bggdiag.hpp"

#include <algorithm>

#include "bgg/errors.hpp"

namespace bgg {

std::string realform_name(RealForm f) {
  switch (f) {
    case RealForm::Split: return "split";
    case RealForm::Quaternionic: return "quaternionic";
    case RealForm::CrHypersurface: return "cr";
    case RealForm::QuaternionicContact: return "quaternionic-contact";
  }
  return "?";
}

std::optional<RealForm> realform_from_name(const std::string& s) {
  if (s == "split") return RealForm::Split;
  if (s == "quaternionic") return RealForm::Quaternionic;
  if (s == "cr" || s == "cr-hypersurface") return RealForm::CrHypersurface;
  if (s == "quaternionic-contact" || s == "qc") return RealForm::QuaternionicContact;
  return std::nullopt;
}

RealFormTag RealFormTag::preset(RealForm f, const GradingInfo& g) {
  const auto& cr = g.crossing.nodes;
  bool a2 = g.spec.series == Series::A && cr == std::vector<int>{2};
  bool a1n = g.spec.series == Series::A && cr == std::vector<int>{1, g.spec.rank};
  bool c2 = g.spec.series == Series::C && cr == std::vector<int>{2};
  switch (f) {
    case RealForm::Split:
      return {f, false};
    case RealForm::Quaternionic:
      if (!a2) throw ConfigError("quaternionic preset needs series A crossed at node 2");
      return {f, false};
    case RealForm::CrHypersurface:
      if (!a1n) throw ConfigError("cr preset needs series A crossed at nodes {1, rank}");
      return {f, true};
    case RealForm::QuaternionicContact:
      if (!c2 || g.spec.rank < 3)
        throw ConfigError("quaternionic-contact preset needs series C (rank >= 3) crossed at node 2");
      return {f, false};
  }
  throw ConfigError("unknown real form");
}

Weight conjugate_weight(const RealFormTag& tag, const Weight& mu) {
  if (!tag.flip) return mu;
  Weight out = mu;
  std::reverse(out.fund.begin(), out.fund.end());
  return out;
}

Weight affine_act(const CartanSpec& spec, const WeylElt& w, const Weight& lambda) {
  Weight delta = weyl_vector(spec);
  return weyl_apply(spec, w, lambda + delta) - delta;
}

bool is_g_dominant(const Weight& mu) {
  for (const Rat& c : mu.fund)
    if (c < 0) return false;
  return true;
}

long long module_dim(const GradingInfo& g, const Weight& Lambda) {
  if (int(Lambda.fund.size()) != g.spec.rank)
    throw DomainError("module_dim: weight rank mismatch");
  if (!Lambda.integral() || !g.is_p_dominant(Lambda))
    throw DomainError("module_dim: weight must be p-dominant integral");
  Weight delta0 = g0_weyl_vector(g);
  Weight shifted = Lambda + delta0;
  Rat dim(1);
  for (const RootVector& alpha : g.delta_plus_g0)
    dim *= cartan_pairing(g.spec, shifted, alpha) / cartan_pairing(g.spec, delta0, alpha);
  check_internal(is_integer(dim) && dim > 0, "Weyl dimension must be a positive integer");
  check_internal(dim.get_num().fits_slong_p(), "module dimension overflows");
  return dim.get_num().get_si();
}

long long operator_order(const BGGDiagram& d, int arrow_idx) {
  if (arrow_idx < 0 || arrow_idx >= int(d.graph.arrows.size()))
    throw DomainError("operator_order: no such arrow");
  const HasseArrow& a = d.graph.arrows[arrow_idx];
  const RootVector& alpha = d.graph.label_root(arrow_idx);
  Weight delta = weyl_vector(d.spec());
  Weight moved = weyl_apply(d.spec(), d.graph.nodes[a.src].w, d.lambda + delta);
  Rat c = cartan_pairing(d.spec(), moved, alpha);
  check_internal(is_integer(c) && c > 0, "arrow order must be a positive integer");
  // dst label = src label - c * alpha, forced by dst = sigma_alpha src
  Weight diff = d.labels[a.src] - d.labels[a.dst];
  Weight expect = weight_from_root(d.spec(), alpha);
  for (Rat& x : expect.fund) x *= c;
  check_internal(diff == expect, "arrow label difference is not c * alpha");
  return to_long(c);
}

int BGGDiagram::node_by_label(const Weight& mu) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == mu) return int(i);
  return -1;
}

BGGDiagram bgg_diagram(const HasseGraph& graph, const Weight& lambda,
                       const RealFormTag& realform) {
  const GradingInfo& g = graph.grading;
  if (int(lambda.fund.size()) != g.spec.rank)
    throw DomainError("bgg_diagram: lambda rank mismatch");
  if (!lambda.integral() || !is_g_dominant(lambda))
    throw DomainError("bgg_diagram: lambda must be g-dominant integral");

  BGGDiagram d{graph, lambda, realform};
  d.order_note_2graded = g.k >= 2;

  for (const HasseNode& n : graph.nodes) {
    Weight lab = affine_act(g.spec, n.w, lambda);
    check_internal(g.is_p_dominant(lab), "node label must be p-dominant");
    d.labels.push_back(lab);
    d.degrees.push_back(int(n.w.word.size()));
    d.dims.push_back(module_dim(g, lab));
  }
  for (size_t a = 0; a < graph.arrows.size(); ++a)
    d.orders.push_back(operator_order(d, int(a)));

  // identification classes under the configured conjugation
  d.class_of.assign(graph.nodes.size(), -1);
  bool lambda_real = conjugate_weight(realform, lambda) == lambda;
  for (size_t v = 0; v < graph.nodes.size(); ++v) {
    if (d.class_of[v] >= 0) continue;
    std::vector<int> cls{int(v)};
    if (realform.flip && lambda_real) {
      Weight conj = conjugate_weight(realform, d.labels[v]);
      if (!(conj == d.labels[v])) {
        int u = d.node_by_label(conj);
        check_internal(u >= 0, "conjugation must permute the label set");
        cls.push_back(u);
        std::sort(cls.begin(), cls.end());
      }
    }
    int ci = int(d.classes.size());
    for (int u : cls) d.class_of[u] = ci;
    d.classes.push_back(std::move(cls));
  }

  if (realform.form == RealForm::Quaternionic) {
    // conjugate labels never coincide here; keep the dimension-parity note
    for (size_t v = 0; v < graph.nodes.size(); ++v)
      for (size_t u = v + 1; u < graph.nodes.size(); ++u)
        check_internal(!(d.labels[u] == d.labels[v]), "node labels must be distinct");
    if ((g.spec.rank - 1) % 2 != 0)
      d.warnings.push_back(
          "quaternionic structures need even n = rank-1; computation is for the complexification");
  }
  if (realform.form == RealForm::QuaternionicContact && g.spec.rank == 3)
    d.warnings.push_back(
        "rank 3: the torsion-free curvature restriction is a genuine assumption");
  return d;
}

Weight dual_label_to_highest_weight(const GradingInfo& g, const Weight& label) {
  // highest weight of the module with lowest weight -label: reflect the
  // negated label to p-dominance with the simple g_0 reflections
  Weight mu = label;
  for (Rat& c : mu.fund) c = -c;
  const CartanMatrix& cm = cartan_matrix(g.spec);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int node : g0_simple_nodes(g)) {
      if (mu.fund[node - 1] < 0) {
        Rat m = mu.fund[node - 1];
        for (int i = 0; i < g.spec.rank; ++i)
          mu.fund[i] -= m * cm.at(i, node - 1);
        moved = true;
      }
    }
  }
  return mu;
}

}  // namespace bgg
