#ifndef FACTO_ORBITS_HPP
#define FACTO_ORBITS_HPP

#include <cstdint>
#include <optional>

#include "facto/cgraph.hpp"
#include "facto/tuples.hpp"

namespace facto {

class CGroupOracle;  // defined in oracle.hpp

struct OrbitSummary {
  Tuple canonical;        // lexicographically least explored tuple
  uint64_t orbit_size = 0;
  uint64_t visited = 0;
  bool capped = false;    // usable only for inequality-by-invariant if set
};

// BFS closure of t under all Hurwitz moves; deterministic. A capped summary
// never certifies equality.
OrbitSummary canonical_form(const EquippedGroup& eg, const Tuple& t, uint64_t cap);

// Equality in S(G,O): the congruence generated by the Hurwitz relations,
// realized as same-orbit of tuples. Undecided if either orbit is capped.
Tri same_class(const EquippedGroup& eg, const Tuple& t1, const Tuple& t2, uint64_t cap);

// Estimated number of tuples sharing the type of t (an upper envelope for
// the orbit size); used to skip hopeless BFS runs.
double orbit_space_estimate(const EquippedGroup& eg, const TypeVector& tau);

// The canonical element s_{Gamma'} as a tuple: per component of the subset,
// each vertex element repeated p_i times, component order then vertex order.
Tuple canonical_element_tuple(const EquippedGroup& eg, const CGraph& graph,
                              const std::vector<uint32_t>& component_subset = {});

// Tests t1 * s_Gamma^k = t2 * s_Gamma^k for k = 0..maxPad. Requires equal
// alpha and tau (else returns no immediately). Small orbits are settled by
// BFS; once every padded type coordinate reaches the T1 threshold the
// comparison is decided exactly through the C-group word oracle.
Tri stabilized_equal(const EquippedGroup& eg, const CGraph& graph,
                     const Tuple& t1, const Tuple& t2, int max_pad,
                     const Caps& caps, const CGroupOracle* oracle = nullptr);

struct EPairResult {
  int k = -1;             // smallest padding length, when decided
  bool decided = false;
  uint64_t tested = 0;
};

// Smallest length of an appended word s with t1*s = t2*s, by breadth-first
// search over appended words; requires alpha(t1) = alpha(t2).
EPairResult e_pair(const EquippedGroup& eg, const Tuple& t1, const Tuple& t2,
                   int max_len, uint64_t orbit_cap, uint64_t budget = 500'000);

struct EGammaBound {
  int lower_bound = 0;     // max e over the pairs that were decided
  uint64_t pairs_total = 0;
  uint64_t pairs_decided = 0;
  bool exact = false;      // every equivalent pair in the window was decided
};

// Lower bound for e_Gamma: sweeps the equivalent pairs of monomial elements
// x_{v_1}^{k_1} ... x_{v_n}^{k_n} with per-component budget sum k <= n_i p_i
// and takes the largest e-pair value decided within the caps. The exact
// constant needs every pair decided, which the caps rarely allow.
EGammaBound e_gamma_lower_bound(const EquippedGroup& eg, const CGraph& graph,
                                const CGroupOracle& oracle, int max_len,
                                uint64_t orbit_cap, uint64_t pair_budget = 2000);

}  // namespace facto

#endif
