#ifndef FACTO_GROUP_HPP
#define FACTO_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "facto/perm.hpp"

namespace facto {

using Eid = uint32_t;  // element index; 0 is always the identity

struct ConjClass {
  Eid representative = 0;            // minimal element index in the class
  std::vector<Eid> members;          // sorted
};

struct Subgroup {
  std::vector<Eid> members;          // sorted; contains 0
  size_t order() const { return members.size(); }
  bool contains(Eid g) const;
};

// Finite permutation group, closed from generators. Elements are numbered in
// BFS order from the identity over sorted generators, which fixes every
// canonical form downstream. Immutable after construction; all queries pure.
class FiniteGroup {
public:
  static constexpr size_t kDenseLimit = 4096;

  // Closes the generators; throws CapExceeded if more than `cap` elements
  // appear, InvalidPermutation for non-bijections / degree mismatches.
  static FiniteGroup close_generators(uint32_t degree, std::vector<Perm> gens,
                                      size_t cap = 10'000'000);

  uint32_t degree() const { return degree_; }
  size_t size() const { return count_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const uint8_t* image(Eid g) const { return arena_.data() + size_t(g) * degree_; }
  Perm perm(Eid g) const;
  std::string cycles(Eid g) const { return perm(g).to_cycles(); }

  // Index of a permutation, or -1 if it is not in the group.
  int64_t index_of(const Perm& p) const;

  Eid mult(Eid a, Eid b) const;        // apply a first, then b
  Eid inv(Eid a) const { return inverse_[a]; }
  Eid conj(Eid g, Eid by) const;       // by^{-1} g by
  int element_order(Eid g) const;

  ConjClass conjugacy_class(Eid g) const;
  // All classes, ordered by representative index (identity class first).
  const std::vector<ConjClass>& conjugacy_classes() const;

  Subgroup centralizer(const std::vector<Eid>& S) const;
  Subgroup center() const;
  Subgroup commutator_subgroup() const;
  Subgroup subgroup_generated(const std::vector<Eid>& elems) const;
  bool is_generating(const std::vector<Eid>& elems) const;

private:
  FiniteGroup() = default;

  Eid intern_find(const uint8_t* img) const;   // -1 encoded as count_
  void rebuild_index();

  uint32_t degree_ = 0;
  size_t count_ = 0;
  std::vector<uint8_t> arena_;                 // count_ * degree_ images
  std::vector<Eid> inverse_;
  std::vector<Perm> gens_;                     // sorted closure generators
  std::vector<Eid> gen_ids_;
  std::vector<Eid> table_;                     // dense mult table if small
  std::vector<uint32_t> slots_;                // open-addressing index
  uint32_t slot_mask_ = 0;
  mutable std::vector<ConjClass> classes_;     // lazy
};

// Parses a group file: one generator per line in cycle notation; optional
// header line "degree: d"; '#' starts a comment.
FiniteGroup parse_group_file(const std::string& text, size_t cap = 10'000'000);

}  // namespace facto

#endif
