#ifndef FACTO_TUPLES_HPP
#define FACTO_TUPLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "facto/equipped.hpp"

namespace facto {

// A word x_{g_1} ... x_{g_n} in the factorization semigroup, stored as the
// ordered sequence of its entries. Entries are element indices lying in O.
using Tuple = std::vector<Eid>;

enum class MoveDir { forward, backward };

struct TypeVector {
  std::vector<uint32_t> counts;   // factors per conjugacy class
  bool operator==(const TypeVector& o) const { return counts == o.counts; }
  uint32_t total() const;
  std::string str() const;
};

// Checks every entry lies in O.
void check_tuple(const EquippedGroup& eg, const Tuple& t);

// The elementary rewrite at adjacent positions (pos, pos+1), 1-based:
//   forward:  (a, b) -> (b, b^{-1} a b)
//   backward: (a, b) -> (a b a^{-1}, a)
// alpha, tau and G_s are unchanged.
Tuple hurwitz_move(const EquippedGroup& eg, const Tuple& t, uint32_t pos, MoveDir dir);

Eid alpha(const EquippedGroup& eg, const Tuple& t);
TypeVector type_of(const EquippedGroup& eg, const Tuple& t);
Subgroup generated_subgroup(const EquippedGroup& eg, const Tuple& t);
bool tuple_generates(const EquippedGroup& eg, const Tuple& t);

// Simultaneous conjugation rho(g): each entry a -> g a g^{-1}.
Tuple conjugate_tuple(const EquippedGroup& eg, Eid g, const Tuple& t);

// lambda(g) = rho(g^{-1}); lambda_S = lambda(alpha(s)), rho_S = rho(alpha(s)).
Tuple lambda_tuple(const EquippedGroup& eg, Eid g, const Tuple& t);
Tuple rho_S(const EquippedGroup& eg, const Tuple& s, const Tuple& t);
Tuple lambda_S(const EquippedGroup& eg, const Tuple& s, const Tuple& t);

Tuple concat(const Tuple& a, const Tuple& b);

std::string tuple_str(const EquippedGroup& eg, const Tuple& t);

}  // namespace facto

#endif
