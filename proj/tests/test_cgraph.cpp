#include <algorithm>

#include "doctest.h"
#include "facto/cgraph.hpp"
#include "facto/orbits.hpp"
#include "helpers.hpp"

using namespace facto;
using namespace facto::testing;

namespace {

// independent all-pairs shortest path oracle over the move relation
std::vector<std::vector<int>> floyd_distances(const CGraph& g,
                                              const std::vector<Vid>& labels) {
  const int INF = 1 << 20;
  std::vector<std::vector<int>> d(g.nv, std::vector<int>(g.nv, INF));
  for (Vid v = 0; v < g.nv; ++v) d[v][v] = 0;
  for (Vid u : labels)
    for (Vid v = 0; v < g.nv; ++v) d[v][g.pi(u, v)] = std::min(d[v][g.pi(u, v)], 1);
  for (Vid k = 0; k < g.nv; ++k)
    for (Vid i = 0; i < g.nv; ++i)
      for (Vid j = 0; j < g.nv; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace

TEST_CASE("sigma3 transposition graph") {
  auto eg = sigma_transpositions(3);
  CGraph g = build_cgraph(eg);
  CHECK(g.nv == 3);
  CHECK(g.comps.size() == 1);
  CHECK(g.comps[0].period == 2);

  // pi_{(1 3)}((1 2)) = (2 3)
  auto vid_of = [&](const char* c) {
    Eid e = eid(eg, c);
    for (Vid v = 0; v < g.nv; ++v)
      if (g.vertex_elem[v] == e) return v;
    FAIL("vertex not found");
    return Vid(0);
  };
  CHECK(g.pi(vid_of("(1 3)"), vid_of("(1 2)")) == vid_of("(2 3)"));

  auto rep = validate_cgraph(g);
  CHECK(rep.all_pass);

  CHECK(is_ample(g, {0}));
  CHECK(diameter(g, {0}) == 1);
  CHECK(canonical_exponents(g, {0}).size() == 3);
  CHECK(g.canonical_length({0}) == 6);
  CHECK(threshold_T1(g) == 13);  // (1+1)*(3*2)+1
}

TEST_CASE("abelian graphs act trivially") {
  auto G = cyclic(5);
  auto eg = make_equipment_cycles(G, {"(1 2 3 4 5)"});
  CGraph g = build_cgraph(eg);
  CHECK(g.nv == 1);
  for (const auto& comp : g.comps) CHECK(comp.period == 1);
  auto [pruned, removed] = prune_free_factors(g);
  CHECK(pruned.nv == 0);
  CHECK(removed.size() == 1);
}

TEST_CASE("sigma4 transpositions match the simplex midpoints") {
  auto eg = sigma_transpositions(4);
  CGraph g = build_cgraph(eg);
  CHECK(g.nv == 6);
  CHECK(g.comps.size() == 1);
  CHECK(g.comps[0].period == 2);

  const auto& G = eg.G();
  for (Vid u = 0; u < g.nv; ++u)
    for (Vid v = 0; v < g.nv; ++v) {
      Perm pu = G.perm(g.vertex_elem[u]);
      Perm pv = G.perm(g.vertex_elem[v]);
      // disjoint (skew) transpositions commute: the edge is a loop
      bool disjoint = true;
      for (uint32_t x = 0; x < 4; ++x)
        if (pu[x] != x && pv[x] != x) disjoint = false;
      if (disjoint) CHECK(g.pi(u, v) == v);
    }
  // pi_{(j k)}((i j)) = (i k)
  auto vid_of = [&](const char* c) {
    Eid e = eid(eg, c);
    for (Vid v = 0; v < g.nv; ++v)
      if (g.vertex_elem[v] == e) return v;
    return Vid(UINT32_MAX);
  };
  CHECK(g.pi(vid_of("(2 3)"), vid_of("(1 2)")) == vid_of("(1 3)"));

  // diameter against the independent oracle
  auto d = floyd_distances(g, g.comps[0].verts);
  int diam = 0;
  for (Vid i = 0; i < g.nv; ++i)
    for (Vid j = 0; j < g.nv; ++j) diam = std::max(diam, d[i][j]);
  CHECK(diameter(g, {0}) == uint32_t(diam));
  CHECK(diam == 2);
}

TEST_CASE("periods by component") {
  // 3-cycles in Sigma_4 have period 3
  auto s4 = symmetric(4);
  auto eg = make_equipment_cycles(s4, {"(1 2)", "(1 2 3)"});
  CGraph g = build_cgraph(eg);
  REQUIRE(g.comps.size() == 2);
  CHECK(g.comps[0].period == 2);
  CHECK(g.comps[1].period == 3);
  CHECK(g.comps[0].class_index == 0);
  CHECK(g.comps[1].class_index == 1);
  auto rep = validate_cgraph(g);
  CHECK(rep.all_pass);
}

TEST_CASE("hand-built graphs and axiom witnesses") {
  // start from the Sigma_3 graph and perturb the action
  auto eg = sigma_transpositions(3);
  CGraph g = build_cgraph(eg);
  std::vector<std::vector<Vid>> rows(g.nv, std::vector<Vid>(g.nv));
  for (Vid u = 0; u < g.nv; ++u)
    for (Vid v = 0; v < g.nv; ++v) rows[u][v] = g.pi(u, v);

  // non-bijective row fails at assembly
  auto bad = rows;
  bad[0][0] = bad[0][1];
  CHECK_THROWS_AS(assemble_cgraph(g.nv, bad), Error);

  // swapping one row breaks the axioms with a witness
  auto perturbed = rows;
  std::swap(perturbed[0], perturbed[1]);
  CGraph h = assemble_cgraph(g.nv, perturbed);
  auto rep = validate_cgraph(h);
  CHECK_FALSE(rep.all_pass);
  bool witnessed = false;
  for (const auto& r : rep.results)
    if (!r.pass && !r.detail.empty()) witnessed = true;
  CHECK(witnessed);
  CHECK(rep.condition_v.find("(v) assumed") != std::string::npos);
}

TEST_CASE("equivariance restatement") {
  // pi_u . pi_w . pi_u^{-1} = pi_{pi_u(w)} for all u, w
  for (auto eg : {sigma_transpositions(3), sigma_transpositions(4)}) {
    CGraph g = build_cgraph(eg);
    for (Vid u = 0; u < g.nv; ++u)
      for (Vid w = 0; w < g.nv; ++w)
        for (Vid v = 0; v < g.nv; ++v)
          CHECK(g.pi(u, g.pi(w, g.pi_inv(u, v))) == g.pi(g.pi(u, w), v));
  }
}

TEST_CASE("ample subsets and diameter monotonicity") {
  auto s4 = symmetric(4);
  auto eg = make_equipment_cycles(s4, {"(1 2)", "(1 2 3)"});
  CGraph g = build_cgraph(eg);
  // transpositions conjugate any 3-cycle to any other
  CHECK(is_ample(g, {0}));
  CHECK(is_ample(g, {0, 1}));
  CHECK(diameter(g, {0, 1}) <= diameter(g, {0}));
  CHECK_THROWS_AS(diameter(g, std::vector<uint32_t>{}), Error);

  // single-class equipment: ample iff connected under its own labels
  auto eg3 = sigma_transpositions(3);
  CGraph g3 = build_cgraph(eg3);
  CHECK(is_ample(g3, {0}));
}

TEST_CASE("threshold and pruning") {
  // single vertex of period 1: T1 = (0+1)*1+1 = 2
  auto G = cyclic(2);
  auto eg = make_equipment_cycles(G, {"(1 2)"});
  CGraph g = build_cgraph(eg);
  CHECK(threshold_T1(g) == 2);

  // mixed input with one central class: exactly that vertex is pruned
  auto d4 = dihedral4();
  auto eg2 = make_equipment_cycles(d4, {"(1 2 3 4)", "(1 3)", "(1 3)(2 4)"});
  CGraph g2 = build_cgraph(eg2);
  auto [reduced, removed] = prune_free_factors(g2);
  CHECK(removed.size() == 1);
  CHECK(reduced.nv == g2.nv - 1);
  for (const auto& comp : reduced.comps) CHECK(comp.period >= 2);

  // nothing pruned on the Sigma_3 graph
  auto eg3 = sigma_transpositions(3);
  CGraph g3 = build_cgraph(eg3);
  CHECK(prune_free_factors(g3).second.empty());
}

TEST_CASE("canonical element tuple") {
  auto eg = sigma_transpositions(3);
  CGraph g = build_cgraph(eg);
  Tuple s = canonical_element_tuple(eg, g);
  CHECK(s.size() == 6);
  CHECK(alpha(eg, s) == 0);  // each transposition squared
}
