#include "latrep/algebra.hpp"

#include "algebras.hpp"
#include "doctest.h"
#include "latrep/errors.hpp"
#include "oracles.hpp"

using namespace latrep;
using namespace test_algebras;

TEST_CASE("is_congruence: equality always, coarse block structure on xor") {
  finite_algebra a = klein_xor();
  CHECK(is_congruence(a, partition::identity(4)).ok);
  CHECK(is_congruence(a, partition::from_blocks(4, {{0, 1}, {2, 3}})).ok);
}

TEST_CASE("is_congruence: failing partition carries a one-step witness") {
  finite_algebra a = klein_xor();
  congruence_verdict v =
      is_congruence(a, partition::from_blocks(4, {{0, 1}, {2}, {3}}));
  CHECK(!v.ok);
  CHECK(v.op_index == 0);
  // the reported tuples differ in exactly one coordinate
  int diffs = 0;
  for (size_t i = 0; i < v.tuple_x.size(); ++i)
    if (v.tuple_x[i] != v.tuple_y[i]) ++diffs;
  CHECK(diffs == 1);
}

TEST_CASE("principal_congruence: reflexive pair generates equality") {
  finite_algebra a = klein_xor();
  CHECK(principal_congruence(a, 2, 2) == partition::identity(4));
}

TEST_CASE("principal_congruence: xor pair (0,1) closes to 01|23") {
  finite_algebra a = klein_xor();
  CHECK(principal_congruence(a, 0, 1) ==
        partition::from_blocks(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("principal_congruence: no operations means equivalence closure only") {
  finite_algebra a = no_ops(5);
  partition p = principal_congruence(a, 1, 3);
  CHECK(p == partition::from_blocks(5, {{0}, {1, 3}, {2}, {4}}));
}

TEST_CASE("enumerate_congruences: one-element algebra") {
  congruence_lattice cl = enumerate_congruences(no_ops(1));
  CHECK(cl.members.size() == 1);
  CHECK(cl.lattice.n == 1);
}

TEST_CASE("enumerate_congruences: Klein xor has exactly five congruences") {
  congruence_lattice cl = enumerate_congruences(klein_xor());
  REQUIRE(cl.members.size() == 5);
  CHECK(cl.members.front() == partition::identity(4));
  CHECK(cl.members.back() == partition::single_block(4));
  // Cross-check against the definition over all partitions of 4 points.
  finite_algebra a = klein_xor();
  int direct = 0;
  for (const auto& p : oracles::all_partitions(4))
    if (is_congruence(a, p).ok) {
      ++direct;
      CHECK(cl.index_of(p) >= 0);
    }
  CHECK(direct == 5);
}

TEST_CASE("enumerate_congruences: no-op algebras give the whole partition lattice") {
  for (int n = 1; n <= 4; ++n) {
    congruence_lattice cl = enumerate_congruences(no_ops(n));
    auto all = oracles::all_partitions(n);
    CHECK(cl.members.size() == all.size());
    for (const auto& p : all) CHECK(cl.index_of(p) >= 0);
  }
}

TEST_CASE("enumerate_congruences: members closed under meet, join and the test") {
  for (const finite_algebra& a :
       {klein_xor(), cyclic_group(6), sym3(),
        lattice_algebra(make_standard(lattice_family::chain, 3))}) {
    congruence_lattice cl = enumerate_congruences(a);
    for (const auto& p : cl.members) CHECK(is_congruence(a, p).ok);
    for (const auto& p : cl.members)
      for (const auto& q : cl.members) {
        CHECK(cl.index_of(partition_meet(p, q)) >= 0);
        CHECK(cl.index_of(partition_join(p, q)) >= 0);
      }
    CHECK(check_busl_axioms(cl.lattice).pass());
  }
}

TEST_CASE("principal congruences are least: filtered over all congruences") {
  for (const finite_algebra& a : {klein_xor(), cyclic_group(5), no_ops(4)}) {
    congruence_lattice cl = enumerate_congruences(a);
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y) {
        partition principal = principal_congruence(a, x, y);
        for (const auto& p : cl.members)
          if (p.same(x, y)) CHECK(principal.refines(p));
        CHECK(cl.index_of(principal) >= 0);
      }
  }
}

TEST_CASE("normal subgroup correspondence for the Klein group") {
  finite_algebra a = klein_xor();
  congruence_lattice cl = enumerate_congruences(a);
  // subgroups of Z_2 x Z_2: {0}, {0,1}, {0,2}, {0,3}, everything
  std::vector<std::vector<int>> subgroups = {
      {0}, {0, 1}, {0, 2}, {0, 3}, {0, 1, 2, 3}};
  for (const auto& h : subgroups) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) {
        // x y^-1 in H; xor is its own inverse
        bool in_h = std::find(h.begin(), h.end(), x ^ y) != h.end();
        if (in_h) pairs.emplace_back(x, y);
      }
    partition coset = partition::from_pairs(4, pairs);
    CHECK(is_congruence(a, coset).ok);
    CHECK(cl.index_of(coset) >= 0);
  }
  CHECK(cl.members.size() == subgroups.size());
}

TEST_CASE("congruence order agrees with pair-set inclusion") {
  for (const finite_algebra& a : {klein_xor(), cyclic_group(6), no_ops(4)}) {
    congruence_lattice cl = enumerate_congruences(a);
    for (size_t i = 0; i < cl.members.size(); ++i)
      for (size_t j = 0; j < cl.members.size(); ++j)
        CHECK(cl.lattice.leq(static_cast<int>(i), static_cast<int>(j)) ==
              cl.members[i].refines(cl.members[j]));
  }
}

TEST_CASE("unary operation: successor on Z_4 leaves the rotation-stable partitions") {
  finite_algebra a;
  a.n = 4;
  a.ops.push_back({1, {1, 2, 3, 0}});
  congruence_lattice cl = enumerate_congruences(a);
  CHECK(cl.members.size() == 3);
  CHECK(cl.index_of(partition::from_blocks(4, {{0, 2}, {1, 3}})) >= 0);
  CHECK(principal_congruence(a, 0, 2) ==
        partition::from_blocks(4, {{0, 2}, {1, 3}}));
  CHECK(principal_congruence(a, 0, 1) == partition::single_block(4));
}

TEST_CASE("ternary operation: witnesses carry full tuples differing once") {
  finite_algebra a;
  a.n = 3;
  operation f;
  f.arity = 3;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) f.table.push_back((x + y + z) % 3);
  a.ops.push_back(f);
  congruence_verdict v =
      is_congruence(a, partition::from_blocks(3, {{0, 1}, {2}}));
  CHECK(!v.ok);
  REQUIRE(v.tuple_x.size() == 3);
  int diffs = 0;
  for (int i = 0; i < 3; ++i)
    if (v.tuple_x[i] != v.tuple_y[i]) ++diffs;
  CHECK(diffs == 1);
  CHECK(enumerate_congruences(a).members.size() == 2);
}

TEST_CASE("enumerate_congruences: carrier bound enforced") {
  CHECK_THROWS_AS(enumerate_congruences(no_ops(17)), size_error);
}

TEST_CASE("random algebras: congruence machinery closes and stays minimal") {
  lcg rng(0x5eed);
  for (int trial = 0; trial < 30; ++trial) {
    finite_algebra a = random_algebra(rng, 3 + rng.next(2), 1 + rng.next(2));
    congruence_lattice cl = enumerate_congruences(a);
    CHECK(cl.members.front() == partition::identity(a.n));
    CHECK(cl.members.back() == partition::single_block(a.n));
    for (const auto& p : cl.members) CHECK(is_congruence(a, p).ok);
    for (const auto& p : cl.members)
      for (const auto& q : cl.members) {
        CHECK(cl.index_of(partition_join(p, q)) >= 0);
        CHECK(cl.index_of(partition_meet(p, q)) >= 0);
      }
    // nothing outside the enumeration is a congruence
    for (const auto& p : oracles::all_partitions(a.n))
      CHECK((cl.index_of(p) >= 0) == is_congruence(a, p).ok);
    // principal congruences are the least members containing their pair
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y) {
        partition principal = principal_congruence(a, x, y);
        CHECK(cl.index_of(principal) >= 0);
        for (const auto& p : cl.members)
          if (p.same(x, y)) CHECK(principal.refines(p));
      }
  }
}

TEST_CASE("validate_shape: broken tables rejected") {
  finite_algebra a = klein_xor();
  a.ops[0].table.pop_back();
  CHECK_THROWS_AS(validate_shape(a), format_error);
  a = klein_xor();
  a.ops[0].table[0] = 9;
  CHECK_THROWS_AS(validate_shape(a), format_error);
}
