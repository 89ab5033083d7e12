#include <random>

#include "doctest.h"
#include "facto/words.hpp"
#include "helpers.hpp"

using namespace facto;
using namespace facto::testing;

TEST_CASE("reductions") {
  auto eg = sigma_transpositions(3);
  CGraph g = build_cgraph(eg);  // p = 2
  CHECK(reduce_word(g, {0, 0, 1}) == Word{1});
  CHECK(reduce_word(g, {0, 1, 2}) == Word{0, 1, 2});
  // y1 y2 y2 y1 -> y1 y1 -> empty in two steps
  Word w{0, 1, 1, 0};
  w = reduce_word(g, w);
  CHECK(w == Word{0, 0});
  w = reduce_word(g, w);
  CHECK(w.empty());

  // p = 3 on the 3-cycle class of Sigma_4
  auto eg2 = make_equipment_cycles(symmetric(4), {"(1 2)", "(1 2 3)"});
  CGraph g2 = build_cgraph(eg2);
  Vid c = g2.comps[1].verts[0];
  CHECK(reduce_word(g2, {c, c}) == Word{c, c});
  CHECK(reduce_word(g2, {c, c, c}).empty());
}

TEST_CASE("braid steps") {
  auto eg = sigma_transpositions(3);
  CGraph g = build_cgraph(eg);
  auto vid_of = [&](const char* c) {
    Eid e = eid(eg, c);
    for (Vid v = 0; v < g.nv; ++v)
      if (g.vertex_elem[v] == e) return v;
    return Vid(UINT32_MAX);
  };
  // sigma_1(y_{(1 2)} y_{(1 3)}) = y_{(2 3)} y_{(1 2)}
  Word w{vid_of("(1 2)"), vid_of("(1 3)")};
  CHECK(braid_step(g, w, 1) == Word{vid_of("(2 3)"), vid_of("(1 2)")});

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Word r(2 + rng() % 6);
    for (auto& v : r) v = rng() % g.nv;
    uint32_t j = 1 + rng() % (r.size() - 1);
    CHECK(braid_step_inv(g, braid_step(g, r, j), j) == r);
    CHECK(braid_step(g, braid_step_inv(g, r, j), j) == r);
  }
  CHECK_THROWS_AS(braid_step(g, Word{0}, 1), Error);
}

TEST_CASE("word universe") {
  auto eg = sigma_transpositions(3);
  CGraph g = build_cgraph(eg);
  auto univ = word_universe(g, 1000);
  CHECK(univ.size() == 16);  // 1 + 3 + 6 + 6
  CHECK(univ[0].empty());
  for (size_t i = 1; i < univ.size(); ++i) {
    CHECK(univ[i - 1].size() <= univ[i].size());
    if (univ[i - 1].size() == univ[i].size()) CHECK(univ[i - 1] < univ[i]);
  }

  // empty graph
  CGraph empty = prune_free_factors(build_cgraph(
      make_equipment_cycles(cyclic(3), {"(1 2 3)"}))).first;
  CHECK(word_universe(empty, 10).size() == 1);

  // a p = 3 component: one 3-cycle class of A4
  auto a4 = alternating4();
  auto ega = make_equipment_cycles(a4, {"(1 2 3)"});
  CGraph ga = build_cgraph(ega);
  REQUIRE(ga.comps.size() == 1);
  CHECK(ga.comps[0].period == 3);
  CHECK(ga.nv == 4);

  CHECK_THROWS_AS(word_universe(ga, 10), Error);  // cap
}

TEST_CASE("pump reaches the universe deterministically") {
  std::mt19937_64 rng(7);
  for (auto reps : {std::vector<std::string>{"(1 2)"},
                    std::vector<std::string>{"(1 2)", "(1 2 3)"}}) {
    auto eg = make_equipment_cycles(symmetric(4), reps);
    CGraph g = build_cgraph(eg);
    for (int i = 0; i < 500; ++i) {
      Word w(1 + rng() % 10);
      for (auto& v : w) v = rng() % g.nv;
      Word p = pump_to_universe(g, w);
      // in the universe: every letter strictly below its period
      std::vector<uint32_t> cnt(g.nv, 0);
      for (Vid v : p) ++cnt[v];
      for (Vid v = 0; v < g.nv; ++v) CHECK(cnt[v] < vertex_period(g, v));
      // ab drops by multiples of the period
      auto ab_w = word_ab(g, w);
      auto ab_p = word_ab(g, p);
      for (size_t c = 0; c < g.comps.size(); ++c) {
        CHECK(ab_w[c] >= ab_p[c]);
        CHECK((ab_w[c] - ab_p[c]) % g.comps[c].period == 0);
      }
      // deterministic
      CHECK(pump_to_universe(g, w) == p);
    }
  }
}
