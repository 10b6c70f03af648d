#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgg/bggdiag.hpp"

namespace bgg {

// A choice of curvature module: a set of degree-2 components of the
// adjoint diagram, each given by its dual label.
struct E0Spec {
  std::vector<Weight> components;
  std::string provenance;  // "preset:torsion-free" or "explicit"
};

// The H_{1,1} component of H_2(p_+, g); needs a recognized diagram family.
E0Spec e0_torsion_free_preset(const GradingInfo& g);

// Checks every component against the degree-2 labels of the adjoint diagram.
void validate_e0(const GradingInfo& g, const E0Spec& e0);

// Exact weight support (no multiplicities) of the irreducible g_0-module
// with p-dominant integral highest weight Lambda, by saturation.
std::vector<Weight> weights_of_irrep(const GradingInfo& g, const Weight& Lambda);

enum class Verdict { ProvablyZero, Inconclusive };

struct MembershipWitness {
  Weight mu;  // support weight of E_0^* realizing the membership
  std::vector<std::pair<RootVector, long>> combo;  // nonnegative coefficients
};

struct VanishVerdict {
  int source = -1, target = -1;  // node ids, or class ids for the real test
  Verdict verdict = Verdict::Inconclusive;
  std::optional<MembershipWitness> witness;
  bool path_unique = false;  // all 2-paths share a single middle node
};

// Complex-type test: provably zero iff no support weight mu of E_0^* has
// mu - (label(target) - label(source)) inside the nonnegative integer
// cone over Delta_+(p_+).
VanishVerdict criterion(const BGGDiagram& d, const E0Spec& e0, int source, int target);

// Real-type test over identification classes: all four conjugated label
// differences must fail the membership, with E_0 complexified.
VanishVerdict criterion_real(const BGGDiagram& d, const E0Spec& e0, int source_class,
                             int target_class);

struct SubcomplexChain {
  std::vector<int> nodes;  // node ids; class ids when real_mode
  std::vector<long long> orders;
  bool real_mode = false;
};

// All maximal directed chains (at least two arrows) whose interior pairs
// are provably zero with a unique connecting 2-path.  Dispatches to the
// identified diagram for a flip real form with a self-conjugate lambda.
std::vector<SubcomplexChain> find_subcomplexes(const BGGDiagram& d, const E0Spec& e0);

// Nonnegative-integer cone membership over generators with nonnegative
// coordinates; exposed for the soundness tests.
bool cone_member(const std::vector<IVec>& gens, const IVec& target,
                 std::vector<long>* combo);

}  // namespace bgg
