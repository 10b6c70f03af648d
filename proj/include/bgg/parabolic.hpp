#pragma once

#include <map>
#include <vector>

#include "bgg/rootlat.hpp"

namespace bgg {

// The crossed nodes of the Dynkin diagram, 1-based and sorted.
struct Crossing {
  std::vector<int> nodes;

  Crossing(std::vector<int> crossed, int rank);

  bool contains(int node) const;  // 1-based
  std::string text() const;       // "{1,4}"
};

// The |k|-grading induced by a crossing: heights of positive roots, the
// split of Delta_+ into the g_0 and p_+ parts, and component dimensions.
struct GradingInfo {
  CartanSpec spec;
  Crossing crossing;
  int k = 0;

  std::vector<RootVector> delta_plus;  // all positive roots, rootlat order
  std::vector<long> heights;           // parallel to delta_plus
  std::vector<RootVector> delta_plus_g0;
  std::vector<RootVector> delta_plus_pplus;
  std::vector<int> g0_idx, pplus_idx;  // indices into delta_plus
  std::map<long, long> dims;           // dim g_i for i = -k..k

  long height_of(const RootVector& alpha) const;  // crossed-coefficient sum
  int pplus_position(const RootVector& alpha) const;  // -1 if absent
  bool is_p_dominant(const Weight& mu) const;  // >= 0 at uncrossed nodes
  std::string text() const;                    // "A5 x{2}"
};

GradingInfo grade(const CartanSpec& spec, const Crossing& crossing);

// Half-sum of Delta_+(g_0).
Weight g0_weyl_vector(const GradingInfo& g);

// Simple roots of g_0 = the uncrossed nodes (1-based).
std::vector<int> g0_simple_nodes(const GradingInfo& g);

}  // namespace bgg
