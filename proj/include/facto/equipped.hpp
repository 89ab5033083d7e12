#ifndef FACTO_EQUIPPED_HPP
#define FACTO_EQUIPPED_HPP

#include <memory>
#include <string>
#include <vector>

#include "facto/group.hpp"

namespace facto {

// A group together with a union O of conjugacy classes, numbered in the
// order the class representatives were given. The identity is never in O.
struct EquippedGroup {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<ConjClass> classes;     // numbering fixed by input order
  std::vector<Eid> O;                 // sorted union of the classes
  std::vector<int32_t> class_of;      // per element; -1 outside O

  const FiniteGroup& G() const { return *group; }
  size_t num_classes() const { return classes.size(); }
  bool o_generates() const;
  std::string describe() const;
};

// Expands class representatives to full classes. Throws if a representative
// is the identity or if two representatives share a class.
EquippedGroup make_equipment(std::shared_ptr<const FiniteGroup> G,
                             const std::vector<Eid>& representatives);

EquippedGroup make_equipment_cycles(std::shared_ptr<const FiniteGroup> G,
                                    const std::vector<std::string>& rep_cycles);

}  // namespace facto

#endif
