#include "facto/partition.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <unordered_map>

#include "facto/intern.hpp"

namespace facto {

namespace {

constexpr uint32_t kMaxUniverseWordLen = 15;
constexpr size_t kTableBound = 2048;  // largest class count the table sweeps handle

// Universe words are encoded as 16 bytes (length + letters) so the intern
// arena can address them.
void encode_word(const Word& w, uint32_t rec[4]) {
  uint8_t bytes[16] = {0};
  bytes[0] = static_cast<uint8_t>(w.size());
  for (size_t i = 0; i < w.size(); ++i) bytes[1 + i] = static_cast<uint8_t>(w[i]);
  std::memcpy(rec, bytes, 16);
}

struct Refiner {
  const CGraph& g;
  Caps caps;
  std::vector<Word> universe;
  InternArena index{4};
  UnionFind uf;
  uint64_t events = 0;

  Refiner(const CGraph& graph, const Caps& c) : g(graph), caps(c) {
    universe = word_universe(g, caps.universe);
    if (!universe.empty() && universe.back().size() > kMaxUniverseWordLen)
      throw Error(ErrorKind::CapExceeded, "universe words longer than supported");
    uint32_t rec[4];
    for (const auto& w : universe) {
      encode_word(w, rec);
      index.intern(rec);
    }
    uf.grow(universe.size());
  }

  uint32_t idx_of(const Word& w) const {
    uint32_t rec[4];
    encode_word(w, rec);
    int64_t i = index.find(rec);
    if (i < 0) throw Error(ErrorKind::PartitionViolation, "pumped word left the universe");
    return static_cast<uint32_t>(i);
  }

  uint32_t pump_idx(Word w) { return idx_of(pump_to_universe(g, std::move(w))); }

  void unite(uint32_t a, uint32_t b) {
    if (uf.unite(a, b)) ++events;
  }

  size_t class_count() {
    size_t n = 0;
    for (uint32_t i = 0; i < universe.size(); ++i)
      if (uf.find(i) == i) ++n;
    return n;
  }

  // Every braid image of a universe word pumps back into the word's class:
  // both lie in the reduction closure of one orbit.
  void braid_sweep() {
    for (uint32_t i = 0; i < universe.size(); ++i) {
      const Word& w = universe[i];
      for (uint32_t j = 1; j < w.size(); ++j) {
        unite(i, pump_idx(braid_step(g, w, j)));
        unite(i, pump_idx(braid_step_inv(g, w, j)));
      }
    }
  }

  // Concatenation with a single letter: the product of a class with a letter
  // class lands in one class, and products sharing a factor and a value force
  // the remaining factors together (cancellation in the realized group).
  void letter_product_sweep() {
    std::unordered_map<uint64_t, uint32_t> first_product;  // (L,R) -> F
    std::unordered_map<uint64_t, uint32_t> left_cancel;    // (R,F) -> L
    std::unordered_map<uint64_t, uint32_t> right_cancel;   // (L,F) -> R
    for (uint32_t i = 0; i < universe.size(); ++i) {
      for (Vid v = 0; v < g.nv; ++v) {
        Word w = universe[i];
        w.push_back(v);
        uint32_t f = uf.find(pump_idx(std::move(w)));
        uint32_t L = uf.find(i), R = uf.find(idx_of(Word{v}));
        auto touch = [&](std::unordered_map<uint64_t, uint32_t>& m, uint32_t a,
                         uint32_t b, uint32_t val) {
          uint64_t key = (uint64_t(a) << 32) | b;
          auto [it, fresh] = m.try_emplace(key, val);
          if (!fresh && uf.find(it->second) != uf.find(val))
            unite(it->second, val);
        };
        touch(first_product, L, R, f);
        touch(left_cancel, R, uf.find(f), L);
        touch(right_cancel, L, uf.find(f), R);
      }
    }
  }

  // Escalation when the cheap sweeps stall on a large class count: process
  // every pair concatenation of the round directly.
  void full_pair_sweep() {
    std::unordered_map<uint64_t, uint32_t> first_product;
    std::unordered_map<uint64_t, uint32_t> left_cancel;
    std::unordered_map<uint64_t, uint32_t> right_cancel;
    const size_t n = universe.size();
    for (uint32_t i = 0; i < n; ++i) {
      for (uint32_t j = 0; j < n; ++j) {
        Word w = universe[i];
        const Word& wj = universe[j];
        w.insert(w.end(), wj.begin(), wj.end());
        uint32_t f = uf.find(pump_idx(std::move(w)));
        uint32_t L = uf.find(i), R = uf.find(j);
        auto touch = [&](std::unordered_map<uint64_t, uint32_t>& m, uint32_t a,
                         uint32_t b, uint32_t val) {
          uint64_t key = (uint64_t(a) << 32) | b;
          auto [it, fresh] = m.try_emplace(key, val);
          if (!fresh && uf.find(it->second) != uf.find(val))
            unite(it->second, val);
        };
        touch(first_product, L, R, f);
        touch(left_cancel, R, uf.find(f), L);
        touch(right_cancel, L, uf.find(f), R);
      }
    }
  }

  struct Table {
    std::vector<uint32_t> roots;  // sorted distinct roots (= least members)
    std::vector<uint32_t> table;  // compact class indices
    std::unordered_map<uint32_t, uint32_t> compact;
    uint32_t id_class = 0;
  };

  Table build_table() {
    Table t;
    for (uint32_t i = 0; i < universe.size(); ++i)
      if (uf.find(i) == i) t.roots.push_back(i);
    std::sort(t.roots.begin(), t.roots.end());
    for (uint32_t k = 0; k < t.roots.size(); ++k) t.compact[t.roots[k]] = k;
    const size_t N = t.roots.size();
    t.table.assign(N * N, 0);
    for (uint32_t a = 0; a < N; ++a) {
      const Word& wa = universe[t.roots[a]];
      for (uint32_t b = 0; b < N; ++b) {
        Word w = wa;
        const Word& wb = universe[t.roots[b]];
        w.insert(w.end(), wb.begin(), wb.end());
        t.table[a * N + b] = t.compact.at(uf.find(pump_idx(std::move(w))));
      }
    }
    t.id_class = t.compact.at(uf.find(idx_of(Word{})));
    return t;
  }

  // Table-level repairs: identity, associativity and the graph relations
  // must hold in the realized group; any failure is itself a sound merge.
  void table_sweep() {
    Table t = build_table();
    const size_t N = t.roots.size();
    auto root_of = [&](uint32_t c) { return uf.find(t.roots[c]); };

    for (uint32_t c = 0; c < N; ++c) {
      uint32_t e = t.id_class;
      if (t.table[e * N + c] != c) unite(root_of(t.table[e * N + c]), root_of(c));
      if (t.table[c * N + e] != c) unite(root_of(t.table[c * N + e]), root_of(c));
    }
    // Light's associativity test over the letter classes, which generate.
    std::vector<uint32_t> letter_cls;
    for (Vid v = 0; v < g.nv; ++v)
      letter_cls.push_back(t.compact.at(uf.find(idx_of(Word{v}))));
    std::sort(letter_cls.begin(), letter_cls.end());
    letter_cls.erase(std::unique(letter_cls.begin(), letter_cls.end()), letter_cls.end());
    for (uint32_t a = 0; a < N; ++a)
      for (uint32_t lg : letter_cls) {
        uint32_t ag = t.table[a * N + lg];
        for (uint32_t b = 0; b < N; ++b) {
          uint32_t x = t.table[ag * N + b];
          uint32_t y = t.table[a * N + t.table[lg * N + b]];
          if (x != y) unite(root_of(x), root_of(y));
        }
      }
    // graph relations in multiplicative form:
    // class(y_v) class(y_u) = class(y_u) class(y_{pi_u(v)})
    for (Vid u = 0; u < g.nv; ++u) {
      uint32_t cu = t.compact.at(uf.find(idx_of(Word{u})));
      for (Vid v = 0; v < g.nv; ++v) {
        uint32_t cv = t.compact.at(uf.find(idx_of(Word{v})));
        uint32_t cw = t.compact.at(uf.find(idx_of(Word{g.pi(u, v)})));
        uint32_t lhs = t.table[cv * N + cu];
        uint32_t rhs = t.table[cu * N + cw];
        if (lhs != rhs) unite(root_of(lhs), root_of(rhs));
      }
    }
    // power relations: class(y_v)^{p} = identity class
    for (Vid v = 0; v < g.nv; ++v) {
      uint32_t cv = t.compact.at(uf.find(idx_of(Word{v})));
      uint32_t acc = t.id_class;
      for (uint32_t k = 0; k < vertex_period(g, v); ++k) acc = t.table[acc * N + cv];
      if (acc != t.id_class) unite(root_of(acc), root_of(t.id_class));
    }
  }

  WordClassPartition run() {
    WordClassPartition out;
    int round = 0;
    for (;;) {
      if (round >= caps.rounds)
        throw Error(ErrorKind::CapExceeded, "partition refinement exceeded round cap");
      events = 0;
      braid_sweep();
      letter_product_sweep();
      size_t n = class_count();
      if (n <= kTableBound) {
        table_sweep();
      } else if (events == 0) {
        full_pair_sweep();
        if (events == 0)
          throw Error(ErrorKind::CapExceeded, "class table too large to certify");
      }
      ++round;
      n = class_count();
      if (!out.n_history.empty() && n > out.n_history.back())
        throw Error(ErrorKind::PartitionViolation, "class count increased");
      out.n_history.push_back(n);
      if (events == 0) break;
    }
    out.rounds = static_cast<size_t>(round);
    out.universe = universe;
    out.class_of.resize(universe.size());
    std::unordered_map<uint32_t, uint32_t> compact;
    std::vector<uint32_t> roots;
    for (uint32_t i = 0; i < universe.size(); ++i)
      if (uf.find(i) == i) roots.push_back(i);
    std::sort(roots.begin(), roots.end());
    for (uint32_t k = 0; k < roots.size(); ++k) compact[roots[k]] = k;
    out.classes.assign(roots.size(), {});
    for (uint32_t i = 0; i < universe.size(); ++i) {
      out.class_of[i] = compact.at(uf.find(i));
      out.classes[out.class_of[i]].push_back(i);
    }
    out.identity_class = out.class_of[idx_of(Word{})];
    size_t covered = 0;
    for (const auto& c : out.classes) covered += c.size();
    if (covered != universe.size())
      throw Error(ErrorKind::PartitionViolation, "classes do not partition the universe");
    return out;
  }
};

}  // namespace

WordClassPartition refine_partition(const CGraph& g, const Caps& caps) {
  for (const auto& comp : g.comps)
    if (comp.period < 2)
      throw Error(ErrorKind::PartitionViolation,
                  "graph has period-1 components; prune free factors first");
  Refiner r(g, caps);
  return r.run();
}

uint32_t TildeGroup::pow(uint32_t a, uint64_t k) const {
  uint32_t acc = identity;
  for (uint64_t i = 0; i < k; ++i) acc = mult(acc, a);
  return acc;
}

bool TildeGroup::in_commutator(uint32_t c) const {
  return std::binary_search(commutator.begin(), commutator.end(), c);
}

TildeGroup tilde_group(const CGraph& g, const WordClassPartition& p) {
  TildeGroup tg;
  tg.order = p.classes.size();
  tg.identity = p.identity_class;
  const size_t N = tg.order;
  tg.table.assign(N * N, 0);

  Refiner helper(g, Caps{});  // fresh index over the same deterministic universe
  if (helper.universe != p.universe)
    throw Error(ErrorKind::Internal, "universe mismatch");

  std::vector<uint32_t> rep(N);
  for (uint32_t c = 0; c < N; ++c) rep[c] = p.classes[c].front();
  for (uint32_t a = 0; a < N; ++a)
    for (uint32_t b = 0; b < N; ++b) {
      Word w = p.universe[rep[a]];
      const Word& wb = p.universe[rep[b]];
      w.insert(w.end(), wb.begin(), wb.end());
      tg.table[a * N + b] = p.class_of[helper.pump_idx(std::move(w))];
    }

  tg.letter_class.resize(g.nv);
  for (Vid v = 0; v < g.nv; ++v)
    tg.letter_class[v] = p.class_of[helper.idx_of(Word{v})];

  // products are constant over every member, not just the representative
  for (uint32_t a = 0; a < N; ++a)
    for (uint32_t ai : p.classes[a]) {
      const Word& w = p.universe[ai];
      for (Vid v = 0; v < g.nv; ++v) {
        Word wv = w;
        wv.push_back(v);
        if (p.class_of[helper.pump_idx(std::move(wv))] !=
            tg.table[a * N + tg.letter_class[v]])
          throw Error(ErrorKind::NotAGroup, "product not constant on a class");
      }
    }

  for (uint32_t c = 0; c < N; ++c)
    if (tg.mult(tg.identity, c) != c || tg.mult(c, tg.identity) != c)
      throw Error(ErrorKind::NotAGroup, "identity fails");
  if (N <= 512) {
    for (uint32_t a = 0; a < N; ++a)
      for (uint32_t b = 0; b < N; ++b)
        for (uint32_t c = 0; c < N; ++c)
          if (tg.mult(tg.mult(a, b), c) != tg.mult(a, tg.mult(b, c)))
            throw Error(ErrorKind::NotAGroup, "associativity fails");
  } else {
    for (uint32_t a = 0; a < N; ++a)
      for (Vid v = 0; v < g.nv; ++v) {
        uint32_t lg = tg.letter_class[v];
        for (uint32_t b = 0; b < N; ++b)
          if (tg.mult(tg.mult(a, lg), b) != tg.mult(a, tg.mult(lg, b)))
            throw Error(ErrorKind::NotAGroup, "associativity fails");
      }
  }
  tg.inverse.assign(N, UINT32_MAX);
  for (uint32_t a = 0; a < N; ++a) {
    for (uint32_t b = 0; b < N; ++b)
      if (tg.mult(a, b) == tg.identity && tg.mult(b, a) == tg.identity) {
        tg.inverse[a] = b;
        break;
      }
    if (tg.inverse[a] == UINT32_MAX)
      throw Error(ErrorKind::NotAGroup, "inverse missing");
  }

  // the graph relations hold in the realized group
  for (Vid u = 0; u < g.nv; ++u)
    for (Vid v = 0; v < g.nv; ++v) {
      uint32_t lhs = tg.mult(tg.letter_class[v], tg.letter_class[u]);
      uint32_t rhs = tg.mult(tg.letter_class[u], tg.letter_class[g.pi(u, v)]);
      if (lhs != rhs) throw Error(ErrorKind::NotAGroup, "graph relation fails");
    }
  for (Vid v = 0; v < g.nv; ++v)
    if (tg.pow(tg.letter_class[v], vertex_period(g, v)) != tg.identity)
      throw Error(ErrorKind::NotAGroup, "power relation fails");

  // commutator subgroup of the class table
  {
    std::vector<bool> in(N, false);
    std::vector<uint32_t> members{tg.identity};
    in[tg.identity] = true;
    std::vector<uint32_t> gens;
    for (uint32_t a = 0; a < N; ++a)
      for (uint32_t b = 0; b < N; ++b) {
        uint32_t c = tg.mult(tg.mult(tg.inverse[a], tg.inverse[b]), tg.mult(a, b));
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
          gens.push_back(c);
        }
      }
    for (size_t i = 0; i < members.size(); ++i)
      for (uint32_t h : gens) {
        uint32_t x = tg.mult(members[i], h);
        if (!in[x]) {
          in[x] = true;
          members.push_back(x);
        }
      }
    tg.commutator = members;
    std::sort(tg.commutator.begin(), tg.commutator.end());
  }

  // abelianization: |G~| = |[G~,G~]| * prod p_i with integral quotient
  uint64_t prod_p = 1;
  for (const auto& comp : g.comps) prod_p *= comp.period;
  if (tg.order != tg.commutator.size() * prod_p)
    throw Error(ErrorKind::NotAGroup, "abelianization order mismatch");

  return tg;
}

uint32_t word_class(const CGraph& g, const WordClassPartition&,
                    const TildeGroup& tg, const Word& w) {
  uint32_t acc = tg.identity;
  for (Vid v : w) {
    if (v >= g.nv) throw Error(ErrorKind::PositionOutOfRange, "letter out of range");
    acc = tg.mult(acc, tg.letter_class[v]);
  }
  return acc;
}

bool words_equal_in_cgroup(const CGraph& g, const WordClassPartition& p,
                           const TildeGroup& tg, const Word& w1, const Word& w2) {
  if (word_ab(g, w1) != word_ab(g, w2)) return false;
  return word_class(g, p, tg, w1) == word_class(g, p, tg, w2);
}

}  // namespace facto
