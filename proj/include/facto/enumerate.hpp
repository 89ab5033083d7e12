#ifndef FACTO_ENUMERATE_HPP
#define FACTO_ENUMERATE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "facto/tuples.hpp"

namespace facto {

struct ClassCount {
  uint64_t count = 0;               // number of Hurwitz classes
  uint64_t tuples = 0;              // tuples enumerated (after filters)
  bool capped = false;              // result is partial if set
  std::vector<Tuple> representatives;  // lexicographically least per class
};

// Enumerates all tuples of type tau with the given product (and G_s = G when
// required) by backtracking with product pruning; length-3 types over large
// classes run as a meet-in-the-middle pair scan with third-entry completion.
// Tuples are partitioned into Hurwitz classes with a union-find over the
// elementary moves. Counts and representatives are deterministic.
ClassCount enumerate_classes(const EquippedGroup& eg, const TypeVector& tau,
                             Eid target_product, bool require_generating,
                             uint64_t tuple_cap, unsigned threads = 1);

// h coefficients of the generating function chi: for every type with total
// length <= max_total_length, the class count with identity product and the
// generating filter.
struct ChiResult {
  std::map<std::vector<uint32_t>, uint64_t> coefficients;
  bool capped = false;
};
ChiResult chi_coefficients(const EquippedGroup& eg, uint32_t max_total_length,
                           uint64_t tuple_cap, unsigned threads = 1);

// Tail check for a single-class coefficient sequence h (h[k] = coefficient
// of t^k, k = 0..len-1): verifies the tail is eventually periodic with the
// nonzero values all equal to `a`. The effective period is p*n times the
// order of the product of the canonical element, which reduces to the
// paper's p*n when that product is the identity.
struct TailReport {
  bool pass = false;
  uint32_t period = 0;
  uint32_t threshold = 0;          // first index of the verified tail
  std::vector<uint32_t> residues;  // r in [0, period) with nonzero tail values
  std::string detail;
};
TailReport rational_tail_check(const std::vector<uint64_t>& h, uint32_t p,
                               uint32_t n, uint64_t a, uint32_t alpha_order = 1);

}  // namespace facto

#endif
