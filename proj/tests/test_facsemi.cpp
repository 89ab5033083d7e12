#include <random>

#include "doctest.h"
#include "facto/oracle.hpp"
#include "facto/orbits.hpp"
#include "helpers.hpp"

using namespace facto;
using namespace facto::testing;

namespace {

Tuple random_tuple(const EquippedGroup& eg, size_t len, std::mt19937_64& rng) {
  Tuple t(len);
  for (auto& e : t) e = eg.O[rng() % eg.O.size()];
  return t;
}

}  // namespace

TEST_CASE("hurwitz moves") {
  auto eg = sigma_transpositions(3);
  Tuple t = tuple_of(eg, {"(1 2)", "(1 3)"});
  CHECK(hurwitz_move(eg, t, 1, MoveDir::forward) == tuple_of(eg, {"(1 3)", "(2 3)"}));

  Tuple same = tuple_of(eg, {"(1 2)", "(1 2)"});
  CHECK(hurwitz_move(eg, same, 1, MoveDir::forward) == same);
  CHECK(hurwitz_move(eg, same, 1, MoveDir::backward) == same);

  // forward then backward at the same position restores the tuple
  std::mt19937_64 rng(11);
  auto eg4 = sigma_transpositions(4);
  for (int i = 0; i < 200; ++i) {
    Tuple r = random_tuple(eg4, 2 + rng() % 5, rng);
    uint32_t pos = 1 + rng() % (r.size() - 1);
    CHECK(hurwitz_move(eg4, hurwitz_move(eg4, r, pos, MoveDir::forward), pos,
                       MoveDir::backward) == r);
  }
  CHECK_THROWS_AS(hurwitz_move(eg, t, 2, MoveDir::forward), Error);
}

TEST_CASE("moves preserve alpha, tau and G_s") {
  std::mt19937_64 rng(5);
  for (auto eg : {sigma_transpositions(3), sigma_transpositions(4)}) {
    for (int i = 0; i < 500; ++i) {
      Tuple t = random_tuple(eg, 2 + rng() % 5, rng);
      uint32_t pos = 1 + rng() % (t.size() - 1);
      auto dir = (rng() & 1) ? MoveDir::forward : MoveDir::backward;
      Tuple u = hurwitz_move(eg, t, pos, dir);
      CHECK(alpha(eg, t) == alpha(eg, u));
      CHECK(type_of(eg, t) == type_of(eg, u));
      CHECK(generated_subgroup(eg, t).members == generated_subgroup(eg, u).members);
    }
  }
}

TEST_CASE("alpha and type basics") {
  auto eg = sigma_transpositions(3);
  Tuple t = tuple_of(eg, {"(1 2)", "(1 2)"});
  CHECK(alpha(eg, t) == 0);

  auto s8 = symmetric(8);
  auto weg = make_equipment_cycles(
      s8, {"(1 2)(3 4 5)", "(1 2 3)(4 5 6 7)", "(1 2 3 4 5 6 7)"});
  Tuple w = tuple_of(weg, {"(1 2)(3 4 5)", "(1 2 3)(4 5 6 7)", "(1 2 3 4 5 6 7)"});
  TypeVector tau = type_of(weg, w);
  CHECK(tau.counts == std::vector<uint32_t>{1, 1, 1});

  CHECK(conjugate_tuple(eg, 0, t) == t);
}

TEST_CASE("braid relations hold as maps on tuples") {
  std::mt19937_64 rng(17);
  auto apply = [](const EquippedGroup& eg, Tuple t, const std::vector<uint32_t>& seq) {
    for (uint32_t j : seq) t = hurwitz_move(eg, t, j, MoveDir::forward);
    return t;
  };
  for (auto eg : {sigma_transpositions(4), sigma_transpositions(3)}) {
    for (int i = 0; i < 300; ++i) {
      Tuple t = random_tuple(eg, 4 + rng() % 3, rng);
      // sigma_i sigma_j = sigma_j sigma_i for |i-j| >= 2
      CHECK(apply(eg, t, {1, 3}) == apply(eg, t, {3, 1}));
      // sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}
      uint32_t j = 1 + rng() % (t.size() - 2);
      CHECK(apply(eg, t, {j, j + 1, j}) == apply(eg, t, {j + 1, j, j + 1}));
    }
  }
}

TEST_CASE("canonical forms and same_class") {
  auto eg = sigma_transpositions(3);
  Tuple a = tuple_of(eg, {"(1 3)", "(2 3)"});
  Tuple b = tuple_of(eg, {"(1 2)", "(1 3)"});
  CHECK(canonical_form(eg, a, 1000).canonical == canonical_form(eg, b, 1000).canonical);
  CHECK(same_class(eg, a, b, 1000) == Tri::yes);

  Tuple single = tuple_of(eg, {"(1 2)"});
  auto s = canonical_form(eg, single, 10);
  CHECK(s.orbit_size == 1);
  CHECK(s.canonical == single);

  // all product-1 generating 4-tuples of transpositions form a single class
  std::vector<Tuple> found;
  for (Eid g1 : eg.O)
    for (Eid g2 : eg.O)
      for (Eid g3 : eg.O)
        for (Eid g4 : eg.O) {
          Tuple t{g1, g2, g3, g4};
          if (alpha(eg, t) == 0 && tuple_generates(eg, t)) found.push_back(t);
        }
  REQUIRE(!found.empty());
  Tuple canon = canonical_form(eg, found[0], 100000).canonical;
  for (const auto& t : found)
    CHECK(canonical_form(eg, t, 100000).canonical == canon);

  // different tau rejects quickly
  auto eg2 = make_equipment_cycles(symmetric(3), {"(1 2)", "(1 2 3)"});
  CHECK(same_class(eg2, tuple_of(eg2, {"(1 2)", "(1 2)"}),
                   tuple_of(eg2, {"(1 2 3)", "(1 3 2)"}), 100) == Tri::no);

  // capped exploration stays undecided
  auto eg4 = sigma_transpositions(4);
  Tuple big1 = tuple_of(eg4, {"(1 2)", "(1 3)", "(1 4)", "(2 3)"});
  Tuple big2 = tuple_of(eg4, {"(1 3)", "(1 2)", "(1 4)", "(2 3)"});
  if (alpha(eg4, big1) == alpha(eg4, big2))
    CHECK(same_class(eg4, big1, big2, 2) == Tri::undecided);
}

TEST_CASE("simultaneous conjugation identities") {
  // s1 * s2 = s2 * lambda_S(s2)(s1) = rho_S(s1)(s2) * s1 as semigroup elements
  std::mt19937_64 rng(13);
  auto eg = sigma_transpositions(3);
  for (int i = 0; i < 40; ++i) {
    Tuple s1 = random_tuple(eg, 1 + rng() % 2, rng);
    Tuple s2 = random_tuple(eg, 1 + rng() % 2, rng);
    Tuple lhs = concat(s1, s2);
    CHECK(canonical_form(eg, lhs, 100000).canonical ==
          canonical_form(eg, concat(s2, lambda_S(eg, s2, s1)), 100000).canonical);
    CHECK(canonical_form(eg, lhs, 100000).canonical ==
          canonical_form(eg, concat(rho_S(eg, s1, s2), s1), 100000).canonical);
  }

  // the kernel of the conjugation action is the centralizer of O
  const auto& G = eg.G();
  Subgroup cent = G.centralizer(std::vector<Eid>(eg.O.begin(), eg.O.end()));
  for (Eid g = 0; g < G.size(); ++g) {
    bool fixes_all = true;
    for (int i = 0; i < 20 && fixes_all; ++i) {
      Tuple t = random_tuple(eg, 3, rng);
      if (conjugate_tuple(eg, g, t) != t) fixes_all = false;
    }
    for (Eid a : eg.O)
      if (conjugate_tuple(eg, g, {a}) != Tuple{a}) fixes_all = false;
    CHECK(fixes_all == cent.contains(g));
  }

  // tau is coordinatewise additive under concatenation
  auto eg2 = make_equipment_cycles(symmetric(4), {"(1 2)", "(1 2 3)"});
  for (int i = 0; i < 50; ++i) {
    Tuple a = random_tuple(eg2, 1 + rng() % 4, rng);
    Tuple b = random_tuple(eg2, 1 + rng() % 4, rng);
    auto ta = type_of(eg2, a), tb = type_of(eg2, b), tc = type_of(eg2, concat(a, b));
    for (size_t c = 0; c < ta.counts.size(); ++c)
      CHECK(tc.counts[c] == ta.counts[c] + tb.counts[c]);
  }
}

TEST_CASE("central commutation") {
  // alpha(t) = 1 forces t to commute with everything
  std::mt19937_64 rng(23);
  auto eg = sigma_transpositions(3);
  int tested = 0;
  while (tested < 30) {
    Tuple t = random_tuple(eg, 2 + 2 * (rng() % 2), rng);
    if (alpha(eg, t) != 0) continue;
    Tuple u = random_tuple(eg, 1 + rng() % 3, rng);
    ++tested;
    CHECK(canonical_form(eg, concat(t, u), 200000).canonical ==
          canonical_form(eg, concat(u, t), 200000).canonical);
  }
}

TEST_CASE("conjugation fixes S^G_1") {
  std::mt19937_64 rng(29);
  auto eg = sigma_transpositions(3);
  int tested = 0;
  while (tested < 20) {
    Tuple t = random_tuple(eg, 4, rng);
    if (alpha(eg, t) != 0 || !tuple_generates(eg, t)) continue;
    ++tested;
    for (Eid g = 0; g < eg.G().size(); ++g)
      CHECK(same_class(eg, t, conjugate_tuple(eg, g, t), 200000) == Tri::yes);
  }
}

TEST_CASE("central powers pad equally") {
  // x_{g1}^n * t = x_{g2}^n * t for conjugate g1, g2 with g1^n central
  auto eg = sigma_transpositions(3);
  std::mt19937_64 rng(31);
  int tested = 0;
  while (tested < 20) {
    Tuple t = random_tuple(eg, 3, rng);
    if (!tuple_generates(eg, t)) continue;
    ++tested;
    Eid g1 = eg.O[rng() % eg.O.size()];
    Eid g2 = eg.O[rng() % eg.O.size()];
    // transpositions square to the identity, which is central
    Tuple a{g1, g1};
    Tuple b{g2, g2};
    CHECK(same_class(eg, concat(a, t), concat(b, t), 500000) == Tri::yes);
  }
}

TEST_CASE("e_pair") {
  auto eg = sigma_transpositions(3);
  Tuple t = tuple_of(eg, {"(1 2)", "(1 3)"});
  auto r = e_pair(eg, t, t, 2, 10000);
  CHECK(r.decided);
  CHECK(r.k == 0);

  // one move apart: already equal in S
  Tuple u = hurwitz_move(eg, t, 1, MoveDir::forward);
  auto r2 = e_pair(eg, t, u, 2, 10000);
  CHECK(r2.decided);
  CHECK(r2.k == 0);

  // monomial pairs from the set E: equivalent but not equal need padding
  Tuple a = tuple_of(eg, {"(1 2)", "(1 2)"});
  Tuple b = tuple_of(eg, {"(1 3)", "(1 3)"});
  auto r3 = e_pair(eg, a, b, 3, 100000);
  CHECK(r3.decided);
  CHECK(r3.k == 1);  // frozen from the exhaustive search

  CHECK_THROWS_AS(e_pair(eg, tuple_of(eg, {"(1 2)"}), tuple_of(eg, {"(1 3)"}), 2, 100),
                  Error);
}

TEST_CASE("e_gamma lower bound on the sigma3 graph") {
  auto eg = sigma_transpositions(3);
  CGroupOracle oracle(eg);
  auto b = e_gamma_lower_bound(eg, oracle.graph(), oracle, 3, 500000, 4000);
  CHECK(b.lower_bound == 1);
  CHECK(b.exact);  // every equivalent monomial pair decided: e_Gamma = 1 here
  CHECK(b.pairs_total == 241);
}

TEST_CASE("stabilized equality with the word oracle") {
  auto eg = sigma_transpositions(3);
  CGroupOracle oracle(eg);
  CGraph g = build_cgraph(eg);
  Caps caps;
  caps.orbit = 200000;

  Tuple t = tuple_of(eg, {"(1 2)", "(1 3)"});
  CHECK(stabilized_equal(eg, g, t, t, 4, caps, &oracle) == Tri::yes);

  // same alpha and tau stabilize in an ambiguity-one equipment
  Tuple a = tuple_of(eg, {"(1 2)", "(1 2)"});
  Tuple b = tuple_of(eg, {"(2 3)", "(2 3)"});
  CHECK(stabilized_equal(eg, g, a, b, 6, caps, &oracle) == Tri::yes);

  // alpha mismatch is an immediate no
  Tuple c = tuple_of(eg, {"(1 2)", "(1 3)"});
  Tuple d = tuple_of(eg, {"(1 2)", "(2 3)"});
  CHECK(stabilized_equal(eg, g, c, d, 4, caps, &oracle) == Tri::no);
}
