#ifndef FACTO_AMBIGUITY_HPP
#define FACTO_AMBIGUITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facto/enumerate.hpp"
#include "facto/oracle.hpp"
#include "facto/orbits.hpp"

namespace facto {

struct PlateauResult {
  uint64_t value = 0;
  bool certified = false;
  std::vector<uint32_t> tau_witness;        // largest grid point with h > 0
  std::vector<std::pair<std::vector<uint32_t>, uint64_t>> trace;
  bool capped = false;
};

struct AmbiguityReport {
  uint64_t value = 0;
  bool methods_agree = false;
  uint64_t via_partition = 0;
  uint64_t via_commutator = 0;
  PlateauResult via_orbits;
  // diagnostics
  uint64_t tilde_order = 0;
  uint64_t tilde_commutator_order = 0;
  uint64_t group_commutator_order = 0;
  uint64_t period_product = 1;
  uint64_t threshold_t1 = 0;                // uniqueness threshold of the graph
  std::vector<std::string> unity_classes;   // representative words
};

// The count of partition classes representing elements of ker(beta) inside
// the commutator of the C-group: classes of [G~,G~] whose members, after the
// central parts y_{i,1}^{k_i p_i} are stripped off, evaluate to the identity
// of G. Evaluation of the stripped word must be constant on every class;
// a violation aborts with NonConstantEvaluation.
uint64_t ambiguity_via_partition(const CGroupOracle& oracle);

// |[G~,G~]| / |[G,G]| with exact divisibility.
uint64_t ambiguity_via_commutator(const CGroupOracle& oracle);

// Class counts over a grid of growing types with identity product and the
// generating filter; the plateau is the stable nonzero count. Certified only
// when every coordinate reaches the T1 bound and a full p_i*n_i increment
// confirms constancy.
PlateauResult ambiguity_via_orbit_stabilization(const EquippedGroup& eg,
                                                const CGraph& graph,
                                                uint64_t tuple_cap,
                                                unsigned threads = 1);

AmbiguityReport ambiguity_report(const EquippedGroup& eg, const Caps& caps,
                                 bool run_orbit_method = true,
                                 unsigned threads = 1);

struct MonotoneReport {
  uint64_t a_full = 0;
  uint64_t a_sub = 0;
  bool holds = false;  // a_full <= a_sub
};

// a_(G,O) <= a_(G,O') for a generating sub-equipment O' (selected classes).
MonotoneReport monotone_bound_check(const EquippedGroup& eg,
                                    const std::vector<uint32_t>& subclass_indices,
                                    const Caps& caps);

struct StabilityReport {
  uint64_t ambiguity = 0;
  size_t pairs_tested = 0;
  size_t pairs_stabilized = 0;
  size_t pairs_undecided = 0;
  // for a > 1: a same-(alpha,tau) pair that never stabilizes, with the
  // partition data certifying distinctness
  std::optional<std::pair<Tuple, Tuple>> non_stabilizing_pair;
  bool pass = false;
};

// Theorem-level dichotomy: with a = 1 sampled same-(alpha,tau) pairs must
// stabilize; with a > 1 a concrete non-stabilizing pair is produced from a
// nontrivial unity class.
StabilityReport stability_check(const EquippedGroup& eg, size_t sample_pairs,
                                const Caps& caps, uint64_t seed = 12345);

}  // namespace facto

#endif
