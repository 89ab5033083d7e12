#ifndef FACTO_PARTITION_HPP
#define FACTO_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "facto/words.hpp"

namespace facto {

// The partition {V~_i} of the bounded word universe W~. Classes are numbered
// by their least member in universe order and always partition the universe;
// N is non-increasing across rounds. identity_class is the class of the
// empty word.
struct WordClassPartition {
  std::vector<Word> universe;                 // fixed order: length, then lex
  std::vector<uint32_t> class_of;             // universe index -> class id
  std::vector<std::vector<uint32_t>> classes; // member lists (universe indices)
  uint32_t identity_class = 0;                // class of the empty word
  size_t rounds = 0;
  std::vector<size_t> n_history;              // N after each round
};

// The finite group realized by the partition classes.
struct TildeGroup {
  size_t order = 0;
  uint32_t identity = 0;
  std::vector<uint32_t> table;      // order x order
  std::vector<uint32_t> inverse;
  std::vector<uint32_t> letter_class;  // vertex -> class of its 1-letter word
  std::vector<uint32_t> commutator;    // sorted class ids of [G~, G~]

  uint32_t mult(uint32_t a, uint32_t b) const { return table[a * order + b]; }
  uint32_t pow(uint32_t a, uint64_t k) const;
  bool in_commutator(uint32_t c) const;
};

// Iterated refinement of the singleton partition of W~ under the braid
// action on pair concatenations and reduction back into the universe.
// Merges are harvested from braid steps, product constancy and cancellation
// and applied through a union-find; rounds repeat until a full round yields
// no merge. The final state is certified: products are well defined, the
// class table is a group, and the C-graph relations hold in it, which pins
// the partition exactly (see tilde_group checks). Throws PartitionViolation
// if certification fails, CapExceeded on budget overrun.
WordClassPartition refine_partition(const CGraph& g, const Caps& caps = Caps{});

// Builds the multiplication table over the partition classes and verifies
// the group axioms, the graph relations and the abelianization order
// (|G~| = |[G~,G~]| * prod p_i). Throws NotAGroup with a witness on failure.
TildeGroup tilde_group(const CGraph& g, const WordClassPartition& p);

// Class of an arbitrary positive word, folded through the class table.
uint32_t word_class(const CGraph& g, const WordClassPartition& p,
                    const TildeGroup& tg, const Word& w);

// Word problem for the finite C-group G_Gamma: positive words are equal iff
// their exact per-component letter counts agree and their residual classes
// in the partition agree.
bool words_equal_in_cgroup(const CGraph& g, const WordClassPartition& p,
                           const TildeGroup& tg, const Word& w1, const Word& w2);

}  // namespace facto

#endif
