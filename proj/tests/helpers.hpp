#ifndef FACTO_TEST_HELPERS_HPP
#define FACTO_TEST_HELPERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "facto/equipped.hpp"
#include "facto/tuples.hpp"

namespace facto::testing {

inline std::shared_ptr<const FiniteGroup> symmetric(uint32_t n) {
  std::vector<Perm> gens{Perm::parse_cycles("(1 2)", n)};
  std::string cyc = "(";
  for (uint32_t i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
  gens.push_back(Perm::parse_cycles(cyc, n));
  return std::make_shared<FiniteGroup>(FiniteGroup::close_generators(n, gens));
}

inline std::shared_ptr<const FiniteGroup> cyclic(uint32_t n) {
  std::string cyc = "(";
  for (uint32_t i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
  return std::make_shared<FiniteGroup>(
      FiniteGroup::close_generators(n, {Perm::parse_cycles(cyc, n)}));
}

// D4 as the symmetries of a square: r = (1 2 3 4), s = (1 3).
inline std::shared_ptr<const FiniteGroup> dihedral4() {
  return std::make_shared<FiniteGroup>(FiniteGroup::close_generators(
      4, {Perm::parse_cycles("(1 2 3 4)", 4), Perm::parse_cycles("(1 3)", 4)}));
}

// Q8 in its regular representation on {1,-1,i,-i,j,-j,k,-k} = points 1..8.
inline std::shared_ptr<const FiniteGroup> quaternion8() {
  return std::make_shared<FiniteGroup>(FiniteGroup::close_generators(
      8, {Perm::parse_cycles("(1 3 2 4)(5 8 6 7)", 8),
          Perm::parse_cycles("(1 5 2 6)(3 7 4 8)", 8)}));
}

inline std::shared_ptr<const FiniteGroup> alternating4() {
  return std::make_shared<FiniteGroup>(FiniteGroup::close_generators(
      4, {Perm::parse_cycles("(1 2 3)", 4), Perm::parse_cycles("(1 2)(3 4)", 4)}));
}

inline EquippedGroup sigma_transpositions(uint32_t n) {
  return make_equipment_cycles(symmetric(n), {"(1 2)"});
}

inline Eid eid(const EquippedGroup& eg, const std::string& cycles) {
  auto p = Perm::parse_cycles(cycles, eg.G().degree());
  auto id = eg.G().index_of(p);
  if (id < 0) throw Error(ErrorKind::ParseError, "not in group: " + cycles);
  return static_cast<Eid>(id);
}

inline Tuple tuple_of(const EquippedGroup& eg, const std::vector<std::string>& cycles) {
  Tuple t;
  for (const auto& c : cycles) t.push_back(eid(eg, c));
  return t;
}

}  // namespace facto::testing

#endif
