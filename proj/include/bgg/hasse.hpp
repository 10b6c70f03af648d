#pragma once

#include <string>
#include <vector>

#include "bgg/parabolic.hpp"

namespace bgg {

// A Weyl group element as its integer action on simple-root coordinates,
// together with a reduced word.
struct WeylElt {
  std::vector<IVec> act;  // column j = image of alpha_j
  std::vector<IVec> inv;  // inverse action
  std::vector<int> word;  // simple reflection indices, 1-based

  int rank() const { return int(act.size()); }
  int length() const { return int(word.size()); }
  bool operator==(const WeylElt& o) const { return act == o.act; }
};

WeylElt weyl_identity(int rank);
WeylElt simple_reflection(const CartanSpec& spec, int j);  // 1-based
WeylElt compose(const WeylElt& w1, const WeylElt& w2);     // w1 after w2

// Integer reflection matrix of an arbitrary root, on simple-root coords.
std::vector<IVec> reflection_matrix(const CartanSpec& spec, const RootVector& alpha);

IVec act_on_coords(const std::vector<IVec>& m, const IVec& x);
QVec act_on_coords(const std::vector<IVec>& m, const QVec& x);

// w(mu) for a weight in fundamental coordinates.
Weight weyl_apply(const CartanSpec& spec, const WeylElt& w, const Weight& mu);

// {alpha in Delta_+ : w^{-1}(alpha) < 0}; its size equals length(w).
std::vector<RootVector> phi_set(const CartanSpec& spec, const WeylElt& w);

struct HasseNode {
  WeylElt w;
  std::vector<int> phi;  // indices into grading.delta_plus, ascending
  std::string name;      // "w_{i,j}", "w^{i,j}", or generic fallback
  int ni = -1, nj = -1;  // the (i,j) of the name, when assigned
  bool mirror = false;   // true for w^{i,j} nodes of |2|-graded diagrams
};

struct HasseArrow {
  int src, dst;
  int label;  // index into grading.delta_plus
};

struct HasseGraph {
  GradingInfo grading;
  std::vector<HasseNode> nodes;    // sorted by (length, phi)
  std::vector<HasseArrow> arrows;  // sorted by (src, dst)
  std::vector<std::vector<int>> out, in;  // arrow indices per node
  int max_length = 0;
  bool named = false;  // (i,j) display names assigned

  const RootVector& label_root(int arrow_idx) const {
    return grading.delta_plus[arrows[arrow_idx].label];
  }
  int length_of(int node) const { return nodes[node].w.length(); }
  std::vector<long> length_histogram() const;
  int node_by_name(const std::string& name) const;  // -1 if absent
  int find_arrow(int src, int dst) const;           // -1 if absent
};

struct HasseOptions {
  long cap = 100000;  // refuse larger W^p
};

HasseGraph hasse_graph(const GradingInfo& grading, const HasseOptions& opt = {});

// |W| / |W_{Delta_0 minus Sigma}|, computed from Weyl group orders.
long wp_size(const GradingInfo& grading);

// Ordered arrow labels along a directed path of node ids.
std::vector<RootVector> edge_labels_on_chain(const HasseGraph& g,
                                             const std::vector<int>& chain);

// Which name coordinate an arrow label advances in the recognized
// diagram families; Cross labels join the two halves of |2|-graded
// diagrams and advance neither.
enum class LabelAxis { I, J, Cross };
LabelAxis label_axis(const GradingInfo& g, const RootVector& label);
bool is_named_family(const GradingInfo& g);

// Maximal directed chains all of whose labels advance the given axis,
// with at least one arrow.
std::vector<std::vector<int>> maximal_axis_chains(const HasseGraph& g, LabelAxis axis);

// The boundary chains of the diagram: the left edge follows the unique
// arrows whose labels avoid alpha_1, starting at the identity; the right
// edge follows the alpha_1-positive labels into the unique maximum.
std::vector<int> left_edge_chain(const HasseGraph& g);
std::vector<int> right_edge_chain(const HasseGraph& g);

}  // namespace bgg
