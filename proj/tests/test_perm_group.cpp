#include <random>

#include "doctest.h"
#include "facto/group.hpp"
#include "helpers.hpp"

using namespace facto;
using namespace facto::testing;

TEST_CASE("cycle notation round trip") {
  for (const char* s : {"(1 2)", "(1 2)(3 4 5)", "(1 4 2 8)", "()"}) {
    Perm p = Perm::parse_cycles(s, 8);
    CHECK(Perm::parse_cycles(p.to_cycles(), 8).images() == p.images());
  }
  CHECK(Perm::parse_cycles("identity", 3).is_identity());
  CHECK_THROWS_AS(Perm::parse_cycles("(1 2", 3), Error);
  CHECK_THROWS_AS(Perm::parse_cycles("(1 1 2)", 3), Error);
}

TEST_CASE("composition applies left factor first") {
  Perm a = Perm::parse_cycles("(1 2)", 3);
  Perm b = Perm::parse_cycles("(1 3)", 3);
  // 1 -(a)-> 2 -(b)-> 2
  CHECK((a * b)[0] == 1);
  CHECK((a * b).to_cycles() == "(1 2 3)");
  CHECK(a.conjugated_by(b).to_cycles() == "(2 3)");
}

TEST_CASE("closure of generators") {
  auto s3 = FiniteGroup::close_generators(
      3, {Perm::parse_cycles("(1 2)", 3), Perm::parse_cycles("(1 2 3)", 3)});
  CHECK(s3.size() == 6);

  auto trivial = FiniteGroup::close_generators(3, {});
  CHECK(trivial.size() == 1);

  // these three fix the point 8, so they close to a copy of Sigma_7
  auto s7 = FiniteGroup::close_generators(
      8, {Perm::parse_cycles("(1 2)(3 4 5)", 8),
          Perm::parse_cycles("(1 2 3)(4 5 6 7)", 8),
          Perm::parse_cycles("(1 2 3 4 5 6 7)", 8)});
  CHECK(s7.size() == 5040);

  CHECK(symmetric(8)->size() == 40320);

  CHECK_THROWS_AS(FiniteGroup::close_generators(
                      8, {Perm::parse_cycles("(1 2 3 4 5 6 7 8)", 8),
                          Perm::parse_cycles("(1 2)", 8)},
                      1000),
                  Error);
}

TEST_CASE("group table agrees with image composition") {
  auto G = symmetric(4);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Eid a = rng() % G->size(), b = rng() % G->size();
    CHECK(G->perm(G->mult(a, b)).images() == (G->perm(a) * G->perm(b)).images());
    CHECK(G->mult(a, G->inv(a)) == 0);
  }
}

TEST_CASE("conjugacy classes") {
  auto s3eg = sigma_transpositions(3);
  const auto& G = s3eg.G();
  ConjClass c = G.conjugacy_class(eid(s3eg, "(1 2)"));
  CHECK(c.members.size() == 3);
  CHECK(G.conjugacy_class(0).members.size() == 1);

  auto s8 = symmetric(8);
  Eid g = static_cast<Eid>(s8->index_of(Perm::parse_cycles("(1 2)(3 4 5)", 8)));
  // permutations of cycle type (2,3,1,1,1): 8!/(2*3*6)
  CHECK(s8->conjugacy_class(g).members.size() == 1120);

  // class sizes divide |G| and partition it
  auto s4 = symmetric(4);
  size_t total = 0;
  for (const auto& cls : s4->conjugacy_classes()) {
    total += cls.members.size();
    CHECK(s4->size() % cls.members.size() == 0);
  }
  CHECK(total == s4->size());

  // class membership is symmetric
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Eid a = rng() % s4->size(), b = rng() % s4->size();
    auto ca = s4->conjugacy_class(a);
    bool b_in_a = std::binary_search(ca.members.begin(), ca.members.end(), b);
    CHECK(b_in_a == (s4->conjugacy_class(b).members == ca.members));
  }
}

TEST_CASE("center and centralizer") {
  auto s3 = symmetric(3);
  CHECK(s3->center().order() == 1);
  Eid t = static_cast<Eid>(s3->index_of(Perm::parse_cycles("(1 2)", 3)));
  CHECK(s3->centralizer({t}).order() == 2);

  // brute-force oracle over all of Q8
  auto q8 = quaternion8();
  Subgroup z = q8->center();
  size_t brute = 0;
  for (Eid g = 0; g < q8->size(); ++g) {
    bool commutes = true;
    for (Eid h = 0; h < q8->size(); ++h)
      if (q8->mult(g, h) != q8->mult(h, g)) {
        commutes = false;
        break;
      }
    if (commutes) {
      ++brute;
      CHECK(z.contains(g));
    }
  }
  CHECK(z.order() == 2);
  CHECK(z.order() == brute);
}

TEST_CASE("commutator subgroups") {
  CHECK(symmetric(3)->commutator_subgroup().order() == 3);
  CHECK(cyclic(6)->commutator_subgroup().order() == 1);
  CHECK(symmetric(4)->commutator_subgroup().order() == 12);
  CHECK(quaternion8()->commutator_subgroup().order() == 2);

  // oracle: closure of the full commutator set
  auto s4 = symmetric(4);
  std::vector<Eid> comms;
  for (Eid a = 0; a < s4->size(); ++a)
    for (Eid b = 0; b < s4->size(); ++b)
      comms.push_back(s4->mult(s4->mult(s4->inv(a), s4->inv(b)), s4->mult(a, b)));
  CHECK(s4->subgroup_generated(comms).members == s4->commutator_subgroup().members);
}

TEST_CASE("subgroup generation") {
  auto s3eg = sigma_transpositions(3);
  const auto& G = s3eg.G();
  CHECK(G.subgroup_generated({eid(s3eg, "(1 2)")}).order() == 2);
  CHECK_FALSE(G.is_generating({eid(s3eg, "(1 2)")}));
  CHECK(G.is_generating({eid(s3eg, "(1 2)"), eid(s3eg, "(1 3)")}));

  // set semantics: order of the generating list is irrelevant
  std::vector<Eid> a{eid(s3eg, "(1 2)"), eid(s3eg, "(1 2 3)")};
  std::vector<Eid> b{eid(s3eg, "(1 2 3)"), eid(s3eg, "(1 2)")};
  CHECK(G.subgroup_generated(a).members == G.subgroup_generated(b).members);
}

TEST_CASE("group file parsing") {
  auto G = parse_group_file("degree: 4\n(1 2)\n(1 2 3 4)  # rotation\n");
  CHECK(G.size() == 24);
  CHECK(G.degree() == 4);
  auto G2 = parse_group_file("(1 2 3)\n");
  CHECK(G2.size() == 3);
}
