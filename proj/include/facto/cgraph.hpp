#ifndef FACTO_CGRAPH_HPP
#define FACTO_CGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facto/equipped.hpp"

namespace facto {

using Vid = uint32_t;  // vertex index

// Labeled directed graph of an equipped group: one vertex per element of O,
// and for each label u the vertex permutation pi_u with pi_u(v) = u^{-1} v u.
// pi_u(v1) = v2 encodes the edge e_{v1,v2,u}. Immutable after construction.
struct CGraph {
  struct Component {
    int32_t class_index = -1;          // -1 for hand-built graphs
    std::vector<Vid> verts;            // ordered by group-element index
    uint32_t period = 0;               // least p with pi_v^p = id, v in comp
  };

  uint32_t nv = 0;
  std::vector<Eid> vertex_elem;        // vid -> group element (empty if hand-built)
  std::vector<Vid> action;             // action[u*nv+v] = pi_u(v)
  std::vector<Vid> action_inv;         // pi_u^{-1}(v)
  std::vector<uint32_t> comp_of;       // vid -> component index
  std::vector<Component> comps;

  Vid pi(Vid label, Vid v) const { return action[size_t(label) * nv + v]; }
  Vid pi_inv(Vid label, Vid v) const { return action_inv[size_t(label) * nv + v]; }
  uint32_t period(uint32_t comp) const;
  size_t num_components() const { return comps.size(); }

  // Sum over components of n_i * p_i restricted to `subset` (empty = all).
  size_t canonical_length(const std::vector<uint32_t>& subset = {}) const;
};

struct AxiomWitness {
  std::string condition;               // "i".."iv", "period"
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomWitness> results;   // one per checked condition
  bool all_pass = true;
  // Condition (v) involves pi_1 of the complex K_Gamma and is not decided.
  std::string condition_v = "conditions (i)-(iv) verified; (v) assumed";
};

CGraph build_cgraph(const EquippedGroup& eg);

// Assembles a graph from raw action tables (one permutation of the vertex
// set per label); used for hand-built graphs in validation tests.
CGraph assemble_cgraph(uint32_t nv, const std::vector<std::vector<Vid>>& action,
                       bool check_axioms = false);

ValidationReport validate_cgraph(const CGraph& g);

// True iff every component of the graph is connected using only moves
// labeled by vertices of the chosen components.
bool is_ample(const CGraph& g, const std::vector<uint32_t>& component_subset);

// Max over components of the max pairwise directed distance, moves labeled
// in the subset. Throws NotAmple if the subset is not ample.
uint32_t diameter(const CGraph& g, const std::vector<uint32_t>& component_subset);

// The data of the canonical element s_{Gamma'}: per vertex of the chosen
// components, its exponent p_i, in component order then vertex order.
std::vector<std::pair<Vid, uint32_t>> canonical_exponents(
    const CGraph& g, const std::vector<uint32_t>& component_subset);

// T1 = (d_Gamma + 1) * max_i(n_i p_i) + 1, d_Gamma the diameter with respect
// to the whole graph.
uint64_t threshold_T1(const CGraph& g);

// Removes every period-1 vertex (such labels act trivially and the vertex is
// fixed by every label); returns the reduced graph and the pruned vertices.
std::pair<CGraph, std::vector<Vid>> prune_free_factors(const CGraph& g);

std::vector<uint32_t> all_components(const CGraph& g);

}  // namespace facto

#endif
