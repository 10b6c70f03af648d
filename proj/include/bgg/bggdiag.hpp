#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgg/hasse.hpp"

namespace bgg {

enum class RealForm { Split, Quaternionic, CrHypersurface, QuaternionicContact };

std::string realform_name(RealForm f);
std::optional<RealForm> realform_from_name(const std::string& s);

// A configured real form: the conjugation acting on weight coordinates
// is either trivial or the A-series diagram flip i -> rank+1-i.
struct RealFormTag {
  RealForm form = RealForm::Split;
  bool flip = false;

  // Validates compatibility with the grading (ConfigError otherwise).
  static RealFormTag preset(RealForm f, const GradingInfo& g);
};

Weight conjugate_weight(const RealFormTag& tag, const Weight& mu);

struct BGGDiagram {
  HasseGraph graph;
  Weight lambda;
  RealFormTag realform;

  std::vector<Weight> labels;       // per node: w . lambda (dual convention)
  std::vector<long long> dims;      // per node: module dimension over g_0
  std::vector<int> degrees;         // per node: homology degree = length
  std::vector<long long> orders;    // per arrow
  std::vector<std::vector<int>> classes;  // identification partition
  std::vector<int> class_of;              // node -> class index
  std::vector<std::string> warnings;
  bool order_note_2graded = false;  // orders are affine-action coefficients;
                                    // analytic orders unverified for |2|-gradings

  const CartanSpec& spec() const { return graph.grading.spec; }
  int node_by_label(const Weight& mu) const;  // -1 if absent
};

// w . lambda = w(lambda + delta) - delta.
Weight affine_act(const CartanSpec& spec, const WeylElt& w, const Weight& lambda);

bool is_g_dominant(const Weight& mu);

// Weyl dimension product over Delta_+(g_0); DomainError when Lambda is
// not p-dominant integral.  Central coordinates do not affect the value.
long long module_dim(const GradingInfo& g, const Weight& Lambda);

// The coefficient c with dst_label = src_label - c * label_root; equals
// <w(lambda+delta), alpha^vee> and is a positive integer on diagram arrows.
long long operator_order(const BGGDiagram& d, int arrow_idx);

BGGDiagram bgg_diagram(const HasseGraph& graph, const Weight& lambda,
                       const RealFormTag& realform);

// Ordinary highest weight of the module labeled by a dual label.
// Unused by the diagram machinery itself.
Weight dual_label_to_highest_weight(const GradingInfo& g, const Weight& label);

}  // namespace bgg
