#ifndef FACTO_WORDS_HPP
#define FACTO_WORDS_HPP

#include <cstdint>
#include <vector>

#include "facto/cgraph.hpp"

namespace facto {

// A positive word in the C-generators: a sequence of vertex ids.
using Word = std::vector<Vid>;

// Period of the component a vertex lies in.
uint32_t vertex_period(const CGraph& g, Vid v);

// Deletes the leftmost consecutive block y^p (p the period of y's
// component); returns the word unchanged if no block exists.
Word reduce_word(const CGraph& g, const Word& w);

// sigma_j, 1-based: (a, b) -> (a b a^{-1}, a) = (pi_a^{-1}(b), a).
Word braid_step(const CGraph& g, const Word& w, uint32_t j);
// sigma_j^{-1}: (a, b) -> (b, pi_b(a)).
Word braid_step_inv(const CGraph& g, const Word& w, uint32_t j);

// All words in which the letter y_{i,j} appears strictly fewer than p_i
// times; ordered by length, then lexicographically. Throws CapExceeded.
std::vector<Word> word_universe(const CGraph& g, uint64_t cap);

// Drives a word into the universe: while some letter has >= p occurrences,
// gathers the first p of them at the front with braid moves (a dragged
// letter passes others unchanged, conjugating what it crosses) and deletes
// the block. Every step is a legal braid move or reduction.
Word pump_to_universe(const CGraph& g, Word w);

// Per-component letter counts of a word (exact integers).
std::vector<uint32_t> word_ab(const CGraph& g, const Word& w);

}  // namespace facto

#endif
