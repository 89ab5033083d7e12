#include "facto/words.hpp"

namespace facto {

uint32_t vertex_period(const CGraph& g, Vid v) {
  return g.comps[g.comp_of[v]].period;
}

Word reduce_word(const CGraph& g, const Word& w) {
  size_t i = 0;
  while (i < w.size()) {
    uint32_t p = vertex_period(g, w[i]);
    size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (run >= p) {
      Word r;
      r.reserve(w.size() - p);
      r.insert(r.end(), w.begin(), w.begin() + i);
      r.insert(r.end(), w.begin() + i + p, w.end());
      return r;
    }
    i += run;
  }
  return w;
}

Word braid_step(const CGraph& g, const Word& w, uint32_t j) {
  if (j < 1 || j >= w.size())
    throw Error(ErrorKind::PositionOutOfRange, "braid position out of range");
  Word r = w;
  Vid a = w[j - 1], b = w[j];
  r[j - 1] = g.pi_inv(a, b);
  r[j] = a;
  return r;
}

Word braid_step_inv(const CGraph& g, const Word& w, uint32_t j) {
  if (j < 1 || j >= w.size())
    throw Error(ErrorKind::PositionOutOfRange, "braid position out of range");
  Word r = w;
  Vid a = w[j - 1], b = w[j];
  r[j - 1] = b;
  r[j] = g.pi(b, a);
  return r;
}

std::vector<Word> word_universe(const CGraph& g, uint64_t cap) {
  std::vector<uint32_t> period(g.nv);
  for (Vid v = 0; v < g.nv; ++v) period[v] = vertex_period(g, v);

  std::vector<Word> out{Word{}};
  std::vector<std::vector<uint8_t>> counts{std::vector<uint8_t>(g.nv, 0)};
  size_t level_begin = 0;
  while (true) {
    size_t level_end = out.size();
    bool grew = false;
    for (size_t i = level_begin; i < level_end; ++i) {
      for (Vid v = 0; v < g.nv; ++v) {
        if (counts[i][v] + 1u >= period[v]) continue;  // letter must appear < p times
        if (out.size() >= cap)
          throw Error(ErrorKind::CapExceeded, "word universe exceeds cap");
        Word w = out[i];
        w.push_back(v);
        auto c = counts[i];
        ++c[v];
        out.push_back(std::move(w));
        counts.push_back(std::move(c));
        grew = true;
      }
    }
    if (!grew) break;
    level_begin = level_end;
  }
  return out;
}

Word pump_to_universe(const CGraph& g, Word w) {
  std::vector<uint32_t> count(g.nv);
  for (;;) {
    std::fill(count.begin(), count.end(), 0);
    Vid target = UINT32_MAX;
    for (Vid letter : w) {
      if (++count[letter] >= vertex_period(g, letter)) {
        target = letter;
        break;
      }
    }
    if (target == UINT32_MAX) return w;
    uint32_t p = vertex_period(g, target);
    // gather the first p occurrences of `target` at positions 0..p-1
    for (uint32_t k = 0; k < p; ++k) {
      size_t pos = k;
      while (w[pos] != target) ++pos;
      for (size_t i = pos; i > k; --i) {
        // move w[i] one step left unchanged; w[i-1] is conjugated
        Vid a = w[i - 1], b = w[i];
        w[i - 1] = b;
        w[i] = g.pi(b, a);
      }
    }
    w.erase(w.begin(), w.begin() + p);
  }
}

std::vector<uint32_t> word_ab(const CGraph& g, const Word& w) {
  std::vector<uint32_t> ab(g.comps.size(), 0);
  for (Vid v : w) ++ab[g.comp_of[v]];
  return ab;
}

}  // namespace facto
