#include "facto/ambiguity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace facto {

namespace {

void require_generating(const EquippedGroup& eg) {
  if (!eg.o_generates())
    throw Error(ErrorKind::GeneratingPrecondition, "O does not generate G");
}

// beta image of a pruned-graph word: ordered product of the vertex elements.
Eid beta_eval(const FiniteGroup& G, const CGraph& g, const Word& w) {
  Eid p = 0;
  for (Vid v : w) p = G.mult(p, g.vertex_elem[v]);
  return p;
}

// Per pruned component: the central element z_i = beta(y_{i,1}^{p_i}).
std::vector<Eid> central_powers(const FiniteGroup& G, const CGraph& g) {
  std::vector<Eid> z;
  for (const auto& comp : g.comps) {
    Eid base = g.vertex_elem[comp.verts.front()];
    Eid acc = 0;
    for (uint32_t k = 0; k < comp.period; ++k) acc = G.mult(acc, base);
    z.push_back(acc);
  }
  return z;
}

// Strips the central parts y_{i,1}^{k_i p_i} off a class member and returns
// the G-evaluation of the residual commutator element.
Eid stripped_eval(const FiniteGroup& G, const CGraph& g, const std::vector<Eid>& z,
                  const Word& w) {
  Eid val = beta_eval(G, g, w);
  std::vector<uint32_t> ab = word_ab(g, w);
  for (size_t i = 0; i < g.comps.size(); ++i) {
    uint32_t p = g.comps[i].period;
    if (ab[i] % p != 0)
      throw Error(ErrorKind::Internal, "commutator class member with ab not divisible by the period");
    uint32_t k = ab[i] / p;
    Eid zi_inv = G.inv(z[i]);
    for (uint32_t t = 0; t < k; ++t) val = G.mult(val, zi_inv);
  }
  return val;
}

}  // namespace

uint64_t ambiguity_via_partition(const CGroupOracle& oracle) {
  require_generating(oracle.equipment());
  const FiniteGroup& G = oracle.equipment().G();
  const CGraph& g = oracle.pruned();
  const WordClassPartition& p = oracle.partition();
  const TildeGroup& tg = oracle.tilde();
  std::vector<Eid> z = central_powers(G, g);
  for (Eid zi : z)
    for (const Perm& gen : G.generators()) {
      Eid ge = static_cast<Eid>(G.index_of(gen));
      if (G.mult(zi, ge) != G.mult(ge, zi))
        throw Error(ErrorKind::Internal, "central power is not central in G");
    }

  uint64_t unity = 0;
  for (uint32_t cls : tg.commutator) {
    Eid value = UINT32_MAX;
    for (uint32_t member : p.classes[cls]) {
      Eid v = stripped_eval(G, g, z, p.universe[member]);
      if (value == UINT32_MAX) value = v;
      else if (value != v)
        throw Error(ErrorKind::NonConstantEvaluation,
                    "class evaluates to more than one group element");
    }
    if (value == 0) ++unity;
  }
  return unity;
}

uint64_t ambiguity_via_commutator(const CGroupOracle& oracle) {
  require_generating(oracle.equipment());
  uint64_t tilde_comm = oracle.tilde().commutator.size();
  uint64_t group_comm = oracle.equipment().G().commutator_subgroup().order();
  if (tilde_comm % group_comm != 0)
    throw Error(ErrorKind::DivisibilityViolation,
                "|[G~,G~]| not divisible by |[G,G]|");
  return tilde_comm / group_comm;
}

PlateauResult ambiguity_via_orbit_stabilization(const EquippedGroup& eg,
                                                const CGraph& graph,
                                                uint64_t tuple_cap,
                                                unsigned threads) {
  require_generating(eg);
  PlateauResult out;
  const size_t m = eg.num_classes();
  if (graph.comps.size() != m)
    throw Error(ErrorKind::GeneratingPrecondition,
                "classes split into several components");

  const FiniteGroup& G = eg.G();
  uint64_t t1 = threshold_T1(graph);
  std::vector<uint32_t> step(m), jump(m), n_i(m);
  for (size_t i = 0; i < m; ++i) {
    const auto& comp = graph.comps[size_t(i)];
    if (comp.class_index != int32_t(i))
      throw Error(ErrorKind::Internal, "component/class numbering mismatch");
    step[i] = comp.period;
    n_i[i] = static_cast<uint32_t>(comp.verts.size());
    // neutral padding block: s_{Gamma_i} repeated until its product returns
    // to the identity
    Eid a = 0;
    for (Vid v : comp.verts)
      for (uint32_t k = 0; k < comp.period; ++k) a = G.mult(a, graph.vertex_elem[v]);
    uint32_t ord = 1;
    Eid acc = a;
    while (acc != 0) {
      acc = G.mult(acc, a);
      ++ord;
    }
    jump[i] = step[i] * n_i[i] * ord;
  }

  const double work_bound = 1.5e7;
  auto feasible = [&](const std::vector<uint32_t>& tau) {
    TypeVector tv{tau};
    double est = orbit_space_estimate(eg, tv);
    return est <= double(tuple_cap) && est * tv.total() <= work_bound;
  };

  // grid of growing coordinates: the full product grid when small, else
  // per-coordinate sweeps with their jump partners
  std::set<std::vector<uint32_t>> grid;
  std::vector<uint32_t> base(m), hi(m);
  uint64_t full_size = 1;
  for (size_t i = 0; i < m; ++i) {
    base[i] = step[i];
    hi[i] = static_cast<uint32_t>(t1 + 2 * jump[i]);
    full_size *= hi[i] / step[i];
    if (full_size > 4096) full_size = 4096;  // saturate
  }
  auto add_point = [&](std::vector<uint32_t> tau) {
    if (feasible(tau)) grid.insert(std::move(tau));
  };
  if (full_size <= 512) {
    std::vector<uint32_t> tau = base;
    for (;;) {
      add_point(tau);
      size_t i = 0;
      while (i < m) {
        tau[i] += step[i];
        if (tau[i] <= hi[i]) break;
        tau[i] = base[i];
        ++i;
      }
      if (i == m) break;
    }
  } else {
    add_point(base);
    for (size_t i = 0; i < m; ++i) {
      for (uint64_t v = step[i]; v <= hi[i]; v += step[i]) {
        auto tau = base;
        tau[i] = static_cast<uint32_t>(v);
        add_point(tau);
        auto tau2 = tau;
        tau2[i] += jump[i];
        add_point(tau2);
      }
    }
  }

  bool found_any = false;
  std::vector<std::pair<std::vector<uint32_t>, uint64_t>> nonzero;
  for (const auto& tau : grid) {
    ClassCount cc = enumerate_classes(eg, TypeVector{tau}, 0, true, tuple_cap, threads);
    out.capped = out.capped || cc.capped;
    out.trace.push_back({tau, cc.count});
    if (cc.count > 0) {
      nonzero.push_back({tau, cc.count});
      found_any = true;
    }
  }
  if (!found_any) {
    out.value = 0;
    return out;
  }

  // plateau: the stable nonzero count at large coordinates
  auto total = [](const std::vector<uint32_t>& t) {
    uint64_t s = 0;
    for (uint32_t c : t) s += c;
    return s;
  };
  std::sort(nonzero.begin(), nonzero.end(),
            [&](const auto& x, const auto& y) { return total(x.first) < total(y.first); });
  uint64_t v = nonzero.back().second;
  uint64_t plateau_from = 0;
  for (const auto& [tau, cnt] : nonzero)
    if (cnt != v) plateau_from = std::max(plateau_from, total(tau) + 1);
  out.value = v;
  out.tau_witness = nonzero.back().first;

  bool coords_reach_t1 = true;
  for (size_t i = 0; i < m; ++i) {
    bool reached = false;
    for (const auto& [tau, cnt] : nonzero)
      if (tau[i] >= t1 && cnt == v) reached = true;
    coords_reach_t1 = coords_reach_t1 && reached;
  }
  bool jumps_confirmed = true;
  for (size_t i = 0; i < m; ++i) {
    bool confirmed = false;
    for (const auto& [tau, cnt] : nonzero) {
      auto tau2 = tau;
      tau2[i] += jump[i];
      for (const auto& [tb, cb] : nonzero)
        if (tb == tau2 && cb == cnt) confirmed = true;
    }
    jumps_confirmed = jumps_confirmed && confirmed;
  }
  out.certified = !out.capped && coords_reach_t1 && jumps_confirmed &&
                  plateau_from <= total(nonzero.front().first);
  return out;
}

AmbiguityReport ambiguity_report(const EquippedGroup& eg, const Caps& caps,
                                 bool run_orbit_method, unsigned threads) {
  require_generating(eg);
  AmbiguityReport rep;
  CGroupOracle oracle(eg, caps);
  rep.via_partition = ambiguity_via_partition(oracle);
  rep.via_commutator = ambiguity_via_commutator(oracle);
  rep.tilde_order = oracle.tilde().order;
  rep.tilde_commutator_order = oracle.tilde().commutator.size();
  rep.group_commutator_order = eg.G().commutator_subgroup().order();
  for (const auto& comp : oracle.pruned().comps) rep.period_product *= comp.period;
  rep.threshold_t1 = oracle.threshold_t1();

  const auto& p = oracle.partition();
  const auto& tgroup = oracle.tilde();
  std::vector<Eid> z = central_powers(eg.G(), oracle.pruned());
  for (uint32_t cls : tgroup.commutator) {
    Eid v = stripped_eval(eg.G(), oracle.pruned(), z, p.universe[p.classes[cls].front()]);
    if (v == 0) {
      std::ostringstream word;
      for (Vid letter : p.universe[p.classes[cls].front()])
        word << eg.G().cycles(oracle.pruned().vertex_elem[letter]) << " ";
      rep.unity_classes.push_back(word.str().empty() ? "(empty word)" : word.str());
    }
  }

  bool agree = rep.via_partition == rep.via_commutator;
  if (run_orbit_method) {
    rep.via_orbits = ambiguity_via_orbit_stabilization(eg, oracle.graph(), caps.tuples, threads);
    if (rep.via_orbits.certified)
      agree = agree && rep.via_orbits.value == rep.via_commutator;
  }
  rep.methods_agree = agree;
  rep.value = rep.via_commutator;
  return rep;
}

MonotoneReport monotone_bound_check(const EquippedGroup& eg,
                                    const std::vector<uint32_t>& subclass_indices,
                                    const Caps& caps) {
  require_generating(eg);
  std::vector<Eid> reps;
  for (uint32_t ci : subclass_indices)
    reps.push_back(eg.classes.at(ci).representative);
  EquippedGroup sub = make_equipment(eg.group, reps);
  if (!sub.o_generates())
    throw Error(ErrorKind::GeneratingPrecondition, "sub-equipment does not generate G");

  MonotoneReport rep;
  CGroupOracle full(eg, caps);
  CGroupOracle subo(sub, caps);
  rep.a_full = ambiguity_via_commutator(full);
  rep.a_sub = ambiguity_via_commutator(subo);
  rep.holds = rep.a_full <= rep.a_sub;
  return rep;
}

StabilityReport stability_check(const EquippedGroup& eg, size_t sample_pairs,
                                const Caps& caps, uint64_t seed) {
  require_generating(eg);
  StabilityReport rep;
  CGroupOracle oracle(eg, caps);
  rep.ambiguity = ambiguity_via_commutator(oracle);
  const FiniteGroup& G = eg.G();
  const CGraph& graph = oracle.graph();

  // pads sufficient to reach the T1 threshold on every component
  uint64_t t1 = oracle.threshold_t1();
  int pads = caps.pad;
  for (const auto& comp : graph.comps) {
    uint64_t block = uint64_t(comp.verts.size()) * comp.period;
    pads = std::max<int>(pads, int((t1 + block - 1) / block) + 1);
  }

  if (rep.ambiguity == 1) {
    std::mt19937_64 rng(seed);
    auto random_tuple = [&](size_t len) {
      Tuple t(len);
      for (auto& e : t) e = eg.O[rng() % eg.O.size()];
      return t;
    };
    size_t made = 0;
    while (made < sample_pairs) {
      size_t len = 2 + rng() % 5;
      Tuple t1v = random_tuple(len);
      TypeVector tau = type_of(eg, t1v);
      Eid a = alpha(eg, t1v);
      bool found = false;
      Tuple t2v;
      for (int attempt = 0; attempt < 2000 && !found; ++attempt) {
        // resample entries class-by-class in a random position pattern
        Tuple cand;
        std::vector<uint32_t> rem = tau.counts;
        for (size_t k = 0; k < len; ++k) {
          size_t c = rng() % eg.num_classes();
          while (!rem[c]) c = (c + 1) % eg.num_classes();
          --rem[c];
          const auto& mem = eg.classes[c].members;
          cand.push_back(mem[rng() % mem.size()]);
        }
        if (alpha(eg, cand) == a) {
          t2v = std::move(cand);
          found = true;
        }
      }
      if (!found) continue;
      ++made;
      ++rep.pairs_tested;
      Tri r = stabilized_equal(eg, graph, t1v, t2v, pads, caps, &oracle);
      if (r == Tri::yes) ++rep.pairs_stabilized;
      else if (r == Tri::undecided) ++rep.pairs_undecided;
    }
    rep.pass = rep.pairs_stabilized == rep.pairs_tested;
  } else {
    // build a witness pair from a nontrivial unity class
    const auto& p = oracle.partition();
    const auto& tg = oracle.tilde();
    const CGraph& pg = oracle.pruned();
    std::vector<Eid> z = central_powers(G, pg);
    for (uint32_t cls : tg.commutator) {
      if (cls == tg.identity) continue;
      uint32_t member = p.classes[cls].front();
      if (stripped_eval(G, pg, z, p.universe[member]) != 0) continue;
      const Word& w = p.universe[member];
      Tuple t1v;
      for (Vid v : w) t1v.push_back(pg.vertex_elem[v]);
      std::vector<uint32_t> ab = word_ab(pg, w);
      Tuple t2v;
      for (size_t i = 0; i < pg.comps.size(); ++i) {
        Eid base = pg.vertex_elem[pg.comps[i].verts.front()];
        for (uint32_t k = 0; k < ab[i]; ++k) t2v.push_back(base);
      }
      if (alpha(eg, t1v) != alpha(eg, t2v) || !(type_of(eg, t1v) == type_of(eg, t2v)))
        throw Error(ErrorKind::Internal, "witness pair construction broke invariants");
      Tri r = stabilized_equal(eg, graph, t1v, t2v, pads, caps, &oracle);
      if (r == Tri::no) {
        rep.non_stabilizing_pair = {t1v, t2v};
        rep.pass = true;
        break;
      }
    }
  }
  return rep;
}

}  // namespace facto
