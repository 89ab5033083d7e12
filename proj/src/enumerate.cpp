#include "facto/enumerate.hpp"
#include <cmath>

#include <algorithm>
#include <thread>

#include "facto/intern.hpp"

namespace facto {

namespace {

bool tuple_less(const uint32_t* a, const uint32_t* b, uint32_t n) {
  for (uint32_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct Enumerator {
  const EquippedGroup& eg;
  const FiniteGroup& G;
  uint32_t n;
  Eid target;
  uint64_t cap;
  bool capped = false;

  // pair-product feasibility: for each group element, the set of ordered
  // class pairs (i,j) with h = x*y, x in C_i, y in C_j; bit i*m+j
  std::vector<uint64_t> pair_mask;
  bool have_pair_mask = false;

  std::vector<uint32_t> scratch;
  std::vector<uint32_t> out;  // flat tuple records

  Enumerator(const EquippedGroup& e, uint32_t len, Eid tgt, uint64_t c)
      : eg(e), G(e.G()), n(len), target(tgt), cap(c), scratch(len) {}

  void build_pair_mask() {
    size_t m = eg.num_classes();
    if (m * m > 64) return;
    uint64_t work = uint64_t(eg.O.size()) * eg.O.size();
    if (work > 8'000'000) return;
    pair_mask.assign(G.size(), 0);
    for (size_t i = 0; i < m; ++i)
      for (Eid x : eg.classes[i].members)
        for (size_t j = 0; j < m; ++j)
          for (Eid y : eg.classes[j].members)
            pair_mask[G.mult(x, y)] |= 1ull << (i * m + j);
    have_pair_mask = true;
  }

  bool pair_feasible(Eid q, const std::vector<uint32_t>& remaining) const {
    size_t m = eg.num_classes();
    uint64_t mask = pair_mask[q];
    if (!mask) return false;
    for (size_t i = 0; i < m; ++i) {
      if (!remaining[i]) continue;
      for (size_t j = 0; j < m; ++j) {
        uint32_t need_j = remaining[j] - (i == j ? 1 : 0);
        if (!need_j) continue;
        if (mask & (1ull << (i * m + j))) return true;
      }
    }
    return false;
  }

  void dfs(uint32_t depth, Eid prefix, std::vector<uint32_t>& remaining) {
    if (capped) return;
    if (depth == n) {
      if (prefix == target) emit();
      return;
    }
    uint32_t left = n - depth;
    Eid q = G.mult(G.inv(prefix), target);  // prefix * q = target
    if (left == 1) {
      int32_t c = (q < G.size()) ? eg.class_of[q] : -1;
      if (c >= 0 && remaining[c] > 0) {
        scratch[depth] = q;
        emit();
      }
      return;
    }
    if (left == 2 && have_pair_mask && !pair_feasible(q, remaining)) return;
    for (size_t c = 0; c < eg.num_classes(); ++c) {
      if (!remaining[c]) continue;
      --remaining[c];
      for (Eid x : eg.classes[c].members) {
        scratch[depth] = x;
        dfs(depth + 1, G.mult(prefix, x), remaining);
        if (capped) break;
      }
      ++remaining[c];
      if (capped) break;
    }
  }

  void emit() {
    if (out.size() / n >= cap) {
      capped = true;
      return;
    }
    out.insert(out.end(), scratch.begin(), scratch.end());
  }
};

}  // namespace

ClassCount enumerate_classes(const EquippedGroup& eg, const TypeVector& tau,
                             Eid target_product, bool require_generating,
                             uint64_t tuple_cap, unsigned threads) {
  if (tau.counts.size() != eg.num_classes())
    throw Error(ErrorKind::ParseError, "type vector length mismatch");
  ClassCount result;
  const FiniteGroup& G = eg.G();
  const uint32_t n = tau.total();
  if (n == 0) {
    if (target_product == 0 && !require_generating) {
      result.count = 1;
      result.representatives.push_back({});
    }
    return result;
  }

  // abelian fast path: classes are singletons, moves are adjacent swaps, so
  // the single multiset determined by tau is one orbit
  {
    bool abelian = true;
    for (const Perm& a : G.generators()) {
      for (const Perm& b : G.generators())
        if (!((a * b) == (b * a))) {
          abelian = false;
          break;
        }
      if (!abelian) break;
    }
    if (abelian) {
      Tuple rep;
      Eid prod = 0;
      for (size_t c = 0; c < tau.counts.size(); ++c)
        for (uint32_t k = 0; k < tau.counts[c]; ++k) {
          rep.push_back(eg.classes[c].members.front());
          prod = G.mult(prod, rep.back());
        }
      std::sort(rep.begin(), rep.end());
      if (prod == target_product &&
          (!require_generating || G.is_generating(rep))) {
        result.count = 1;
        // arrangements of the multiset, saturating on overflow
        long double arrangements = std::exp(
            std::lgamma((long double)n + 1) -
            [&] {
              long double s = 0;
              for (uint32_t c : tau.counts) s += std::lgamma((long double)c + 1);
              return s;
            }());
        result.tuples = arrangements < 1e18 ? (uint64_t)std::llround((double)arrangements)
                                            : UINT64_MAX;
        result.representatives.push_back(std::move(rep));
      }
      return result;
    }
  }

  Enumerator en(eg, n, target_product, tuple_cap);
  if (n >= 3) en.build_pair_mask();
  std::vector<uint32_t> remaining = tau.counts;

  if (threads > 1 && n >= 2) {
    // shard on the first entry; shards are concatenated in order, so the
    // arena numbering matches the single-threaded run
    struct Shard {
      std::vector<std::pair<size_t, Eid>> firsts;  // (class, element)
      std::vector<uint32_t> out;
      bool capped = false;
    };
    std::vector<std::pair<size_t, Eid>> firsts;
    for (size_t c = 0; c < eg.num_classes(); ++c)
      if (remaining[c])
        for (Eid x : eg.classes[c].members) firsts.push_back({c, x});
    std::vector<Shard> shards(threads);
    for (size_t k = 0; k < firsts.size(); ++k)
      shards[k % threads].firsts.push_back(firsts[k]);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        Enumerator local(eg, n, target_product, tuple_cap);
        local.pair_mask = en.pair_mask;
        local.have_pair_mask = en.have_pair_mask;
        std::vector<uint32_t> rem = tau.counts;
        for (auto [c, x] : shards[t].firsts) {
          --rem[c];
          local.scratch[0] = x;
          local.dfs(1, x, rem);
          ++rem[c];
        }
        shards[t].out = std::move(local.out);
        shards[t].capped = local.capped;
      });
    }
    for (auto& th : pool) th.join();
    // shard outputs concatenate in shard order; interned numbering differs
    // from the single-threaded run but counts and lex-min reps do not
    for (auto& s : shards) {
      en.out.insert(en.out.end(), s.out.begin(), s.out.end());
      en.capped = en.capped || s.capped;
    }
    // a single-threaded run caps on the merged total, so match it
    if (en.out.size() / n > tuple_cap) en.capped = true;
  } else {
    en.dfs(0, 0, remaining);
  }
  result.capped = en.capped;
  const uint64_t total = en.out.size() / n;
  if (en.capped) {
    // partial enumeration: moves would leave the set, so no class analysis
    result.tuples = total;
    return result;
  }

  // intern all tuples, then merge orbits under the elementary moves
  InternArena arena(n);
  for (uint64_t i = 0; i < total; ++i) arena.intern(en.out.data() + i * n);
  en.out.clear();
  en.out.shrink_to_fit();

  UnionFind ufind;
  ufind.grow(arena.size());
  std::vector<uint32_t> buf(n);
  for (uint32_t idx = 0; idx < arena.size(); ++idx) {
    const uint32_t* cur = arena.get(idx);
    for (uint32_t pos = 0; pos + 1 < n; ++pos) {
      std::copy(cur, cur + n, buf.begin());
      Eid a = cur[pos], b = cur[pos + 1];
      buf[pos] = b;
      buf[pos + 1] = G.conj(a, b);
      int64_t j = arena.find(buf.data());
      if (j < 0)
        throw Error(ErrorKind::Internal, "move left the enumerated set");
      ufind.unite(idx, static_cast<uint32_t>(j));
    }
  }

  // count roots passing the generating filter (move-invariant, so the root
  // representative decides for the whole orbit)
  std::vector<uint32_t> roots;
  for (uint32_t idx = 0; idx < arena.size(); ++idx)
    if (ufind.find(idx) == idx) roots.push_back(idx);
  std::vector<uint8_t> counted(arena.size(), 0);
  for (uint32_t r : roots) {
    if (require_generating) {
      Tuple t(arena.get(r), arena.get(r) + n);
      if (!G.is_generating(t)) continue;
    }
    counted[r] = 1;
    ++result.count;
  }
  // lexicographically minimal representative per counted class
  std::vector<int64_t> best(arena.size(), -1);
  for (uint32_t idx = 0; idx < arena.size(); ++idx) {
    uint32_t r = ufind.find(idx);
    if (!counted[r]) continue;
    if (best[r] < 0 || tuple_less(arena.get(idx), arena.get(uint32_t(best[r])), n))
      best[r] = idx;
  }
  for (uint32_t r : roots)
    if (counted[r])
      result.representatives.emplace_back(arena.get(uint32_t(best[r])),
                                          arena.get(uint32_t(best[r])) + n);
  std::sort(result.representatives.begin(), result.representatives.end());
  // tuples passing the filter
  if (require_generating) {
    uint64_t kept = 0;
    for (uint32_t idx = 0; idx < arena.size(); ++idx)
      if (counted[ufind.find(idx)]) ++kept;
    result.tuples = kept;
  } else {
    result.tuples = arena.size();
  }
  return result;
}

ChiResult chi_coefficients(const EquippedGroup& eg, uint32_t max_total_length,
                           uint64_t tuple_cap, unsigned threads) {
  ChiResult res;
  const size_t m = eg.num_classes();
  std::vector<uint32_t> tau(m, 0);
  // iterate all compositions with 1 <= total <= max_total_length
  for (;;) {
    size_t i = 0;
    while (i < m) {
      ++tau[i];
      uint32_t total = 0;
      for (uint32_t c : tau) total += c;
      if (total <= max_total_length) break;
      tau[i] = 0;
      ++i;
    }
    if (i == m) break;
    TypeVector tv{tau};
    ClassCount cc = enumerate_classes(eg, tv, 0, true, tuple_cap, threads);
    res.capped = res.capped || cc.capped;
    res.coefficients[tau] = cc.count;
  }
  return res;
}

TailReport rational_tail_check(const std::vector<uint64_t>& h, uint32_t p,
                               uint32_t n, uint64_t a, uint32_t alpha_order) {
  TailReport rep;
  rep.period = p * n * alpha_order;
  const uint32_t P = rep.period;
  if (P == 0) throw Error(ErrorKind::InsufficientData, "degenerate period");
  if (h.size() < 2 * P)
    throw Error(ErrorKind::InsufficientData,
                "sequence shorter than two tail repetitions");
  const uint32_t len = static_cast<uint32_t>(h.size());
  for (uint32_t t0 = 0; t0 + 2 * P <= len; ++t0) {
    bool ok = true;
    for (uint32_t k = t0; k + P < len && ok; ++k)
      if (h[k + P] != h[k]) ok = false;
    for (uint32_t k = t0; k < len && ok; ++k)
      if (h[k] != 0 && h[k] != a) ok = false;
    if (ok) {
      rep.pass = true;
      rep.threshold = t0;
      for (uint32_t k = t0; k < std::min(len, t0 + P); ++k)
        if (h[k] != 0) rep.residues.push_back(k % P);
      std::sort(rep.residues.begin(), rep.residues.end());
      rep.residues.erase(std::unique(rep.residues.begin(), rep.residues.end()),
                         rep.residues.end());
      return rep;
    }
  }
  rep.detail = "no periodic tail with constant value found";
  return rep;
}

}  // namespace facto
