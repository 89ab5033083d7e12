#include "facto/orbits.hpp"

#include <algorithm>
#include <cmath>

#include "facto/intern.hpp"
#include "facto/oracle.hpp"

namespace facto {

namespace {

bool tuple_less(const uint32_t* a, const uint32_t* b, uint32_t n) {
  for (uint32_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

OrbitSummary canonical_form(const EquippedGroup& eg, const Tuple& t, uint64_t cap) {
  check_tuple(eg, t);
  OrbitSummary out;
  if (t.empty()) {
    out.orbit_size = 1;
    out.visited = 1;
    return out;
  }
  const FiniteGroup& G = eg.G();
  const uint32_t n = static_cast<uint32_t>(t.size());
  InternArena arena(n);
  arena.intern(t.data());
  uint32_t best = 0;

  std::vector<uint32_t> buf(n);
  for (uint32_t head = 0; head < arena.size(); ++head) {
    if (arena.size() > cap) {
      out.capped = true;
      break;
    }
    const uint32_t* cur = arena.get(head);
    for (uint32_t pos = 0; pos + 1 < n; ++pos) {
      // forward: (a,b) -> (b, b^{-1} a b)
      std::copy(cur, cur + n, buf.begin());
      Eid a = cur[pos], b = cur[pos + 1];
      buf[pos] = b;
      buf[pos + 1] = G.conj(a, b);
      auto [idx, fresh] = arena.intern(buf.data());
      if (fresh && tuple_less(arena.get(idx), arena.get(best), n)) best = idx;
      cur = arena.get(head);  // arena may reallocate
      // backward: (a,b) -> (a b a^{-1}, a)
      std::copy(cur, cur + n, buf.begin());
      buf[pos] = G.conj(b, G.inv(a));
      buf[pos + 1] = a;
      auto [idx2, fresh2] = arena.intern(buf.data());
      if (fresh2 && tuple_less(arena.get(idx2), arena.get(best), n)) best = idx2;
      cur = arena.get(head);
    }
  }
  out.visited = arena.size();
  out.orbit_size = arena.size();
  out.canonical.assign(arena.get(best), arena.get(best) + n);
  return out;
}

Tri same_class(const EquippedGroup& eg, const Tuple& t1, const Tuple& t2, uint64_t cap) {
  if (t1.size() != t2.size()) return Tri::no;
  if (alpha(eg, t1) != alpha(eg, t2)) return Tri::no;
  if (!(type_of(eg, t1) == type_of(eg, t2))) return Tri::no;
  if (generated_subgroup(eg, t1).members != generated_subgroup(eg, t2).members)
    return Tri::no;
  OrbitSummary s1 = canonical_form(eg, t1, cap);
  if (!s1.capped) {
    OrbitSummary s2 = canonical_form(eg, t2, cap);
    if (!s2.capped) return s1.canonical == s2.canonical ? Tri::yes : Tri::no;
  }
  return Tri::undecided;
}

double orbit_space_estimate(const EquippedGroup& eg, const TypeVector& tau) {
  // number of tuples sharing the type: multinomial(n; tau) * prod |C_i|^tau_i,
  // divided by |G| as the typical fiber fraction for a fixed product
  double log_est = std::lgamma(double(tau.total()) + 1.0);
  for (size_t i = 0; i < tau.counts.size(); ++i) {
    log_est -= std::lgamma(double(tau.counts[i]) + 1.0);
    log_est += tau.counts[i] * std::log(double(eg.classes[i].members.size()));
  }
  log_est -= std::log(double(eg.G().size()));
  return log_est > 60 ? std::exp(60.0) : std::exp(log_est);
}

Tuple canonical_element_tuple(const EquippedGroup&, const CGraph& graph,
                              const std::vector<uint32_t>& component_subset) {
  std::vector<uint32_t> subset = component_subset;
  if (subset.empty()) subset = all_components(graph);
  Tuple s;
  for (auto [vid, exponent] : canonical_exponents(graph, subset))
    for (uint32_t k = 0; k < exponent; ++k) s.push_back(graph.vertex_elem[vid]);
  return s;
}

Tri stabilized_equal(const EquippedGroup& eg, const CGraph& graph,
                     const Tuple& t1, const Tuple& t2, int max_pad,
                     const Caps& caps, const CGroupOracle* oracle) {
  if (alpha(eg, t1) != alpha(eg, t2)) return Tri::no;
  TypeVector tau = type_of(eg, t1);
  if (!(tau == type_of(eg, t2))) return Tri::no;
  if (t1 == t2) return Tri::yes;

  Tuple s_gamma = canonical_element_tuple(eg, graph, {});
  Tuple p1 = t1, p2 = t2;
  for (int k = 0; k <= max_pad; ++k) {
    if (k > 0) {
      p1 = concat(p1, s_gamma);
      p2 = concat(p2, s_gamma);
    }
    if (oracle && k >= 1) {
      // Once every padded component count reaches T1 and the padding brought
      // in every letter, equality is uniqueness-at-large-type: exactly the
      // C-group product decides, and the verdict is final in either
      // direction (padding scales both sides by the same central element).
      std::vector<uint64_t> comp_count(graph.comps.size(), 0);
      for (Eid e : p1) ++comp_count[graph.comp_of[oracle->vertex_of(e)]];
      bool big = true;
      for (uint64_t c : comp_count)
        if (c < oracle->threshold_t1()) {
          big = false;
          break;
        }
      if (big) return oracle->equal_in_cgroup(p1, p2) ? Tri::yes : Tri::no;
    }
    TypeVector padded_tau = type_of(eg, p1);
    if (orbit_space_estimate(eg, padded_tau) <= double(caps.orbit)) {
      Tri r = same_class(eg, p1, p2, caps.orbit);
      if (r == Tri::yes) return Tri::yes;
      // an unequal or capped verdict at this pad does not settle larger pads
    }
  }
  return Tri::undecided;
}

EGammaBound e_gamma_lower_bound(const EquippedGroup& eg, const CGraph& graph,
                                const CGroupOracle& oracle, int max_len,
                                uint64_t orbit_cap, uint64_t pair_budget) {
  // monomial elements: per vertex an exponent, per component sum <= n_i p_i
  std::vector<uint32_t> budget_of(graph.nv);
  for (Vid v = 0; v < graph.nv; ++v) {
    const auto& comp = graph.comps[graph.comp_of[v]];
    budget_of[v] = static_cast<uint32_t>(comp.verts.size()) * comp.period;
  }
  std::vector<Tuple> monomials;
  std::vector<uint32_t> expo(graph.nv, 0);
  for (;;) {
    bool ok = true;
    std::vector<uint32_t> comp_sum(graph.comps.size(), 0);
    for (Vid v = 0; v < graph.nv && ok; ++v) {
      comp_sum[graph.comp_of[v]] += expo[v];
      if (comp_sum[graph.comp_of[v]] > budget_of[v]) ok = false;
    }
    if (ok) {
      Tuple t;
      for (Vid v = 0; v < graph.nv; ++v)
        for (uint32_t k = 0; k < expo[v]; ++k) t.push_back(graph.vertex_elem[v]);
      monomials.push_back(std::move(t));
    }
    size_t i = 0;
    while (i < graph.nv && ++expo[i] > budget_of[i]) expo[i++] = 0;
    if (i == graph.nv) break;
  }

  EGammaBound out;
  out.exact = true;
  for (size_t i = 0; i < monomials.size(); ++i)
    for (size_t j = i + 1; j < monomials.size(); ++j) {
      // equivalent pairs are exactly the pairs with equal C-group product
      if (monomials[i].size() != monomials[j].size()) continue;
      if (!oracle.equal_in_cgroup(monomials[i], monomials[j])) continue;
      ++out.pairs_total;
      if (out.pairs_total > pair_budget) {
        out.exact = false;
        return out;
      }
      EPairResult r = e_pair(eg, monomials[i], monomials[j], max_len, orbit_cap);
      if (r.decided) {
        ++out.pairs_decided;
        out.lower_bound = std::max(out.lower_bound, r.k);
      } else {
        out.exact = false;
      }
    }
  return out;
}

EPairResult e_pair(const EquippedGroup& eg, const Tuple& t1, const Tuple& t2,
                   int max_len, uint64_t orbit_cap, uint64_t budget) {
  EPairResult res;
  if (alpha(eg, t1) != alpha(eg, t2))
    throw Error(ErrorKind::GeneratingPrecondition, "e_pair requires equal products");
  std::vector<Tuple> level{Tuple{}};
  for (int len = 0; len <= max_len; ++len) {
    for (const Tuple& s : level) {
      if (++res.tested > budget) return res;
      Tri r = same_class(eg, concat(t1, s), concat(t2, s), orbit_cap);
      if (r == Tri::yes) {
        res.k = len;
        res.decided = true;
        return res;
      }
    }
    std::vector<Tuple> next;
    next.reserve(level.size() * eg.O.size());
    for (const Tuple& s : level)
      for (Eid g : eg.O) {
        Tuple s2 = s;
        s2.push_back(g);
        next.push_back(std::move(s2));
      }
    level = std::move(next);
  }
  return res;
}

}  // namespace facto
