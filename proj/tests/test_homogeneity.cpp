#include "latrep/homogeneity.hpp"

#include <algorithm>

#include "algebras.hpp"
#include "doctest.h"
#include "latrep/errors.hpp"
#include "latrep/iso.hpp"

using namespace latrep;
using namespace test_algebras;

namespace {

rel_structure klein_congruence_family() {
  return rel_structure::from_congruences(enumerate_congruences(klein_xor()));
}

// independent union-find closure of the pairs {f(a), f(b)}
bool closure_reaches(const rel_structure& s,
                     const std::vector<std::vector<int>>& maps, int a, int b,
                     int c, int d) {
  union_find uf(s.n);
  for (const auto& f : maps) uf.unite(f[a], f[b]);
  return uf.find(c) == uf.find(d);
}

}  // namespace

TEST_CASE("relation_preserving_maps: only the identity family is free") {
  rel_structure s;
  s.n = 3;
  s.relations = {partition::identity(3)};
  auto maps = relation_preserving_maps(s);
  CHECK(maps.size() == 27);  // every self-map
}

TEST_CASE("relation_preserving_maps: the full relation imposes nothing") {
  rel_structure s;
  s.n = 3;
  s.relations = {partition::identity(3), partition::single_block(3)};
  CHECK(relation_preserving_maps(s).size() == 27);
}

TEST_CASE("relation_preserving_maps: Klein congruences leave translations and constants") {
  rel_structure s = klein_congruence_family();
  auto maps = relation_preserving_maps(s);
  CHECK(maps.size() == 8);
  for (int c = 0; c < 4; ++c) {
    std::vector<int> translation(4), constant(4, c);
    for (int x = 0; x < 4; ++x) translation[x] = x ^ c;
    CHECK(std::find(maps.begin(), maps.end(), translation) != maps.end());
    CHECK(std::find(maps.begin(), maps.end(), constant) != maps.end());
  }
}

TEST_CASE("relation_preserving_maps: monoid under composition with identity") {
  rel_structure s = klein_congruence_family();
  auto maps = relation_preserving_maps(s);
  std::vector<int> id{0, 1, 2, 3};
  CHECK(std::find(maps.begin(), maps.end(), id) != maps.end());
  for (const auto& f : maps)
    for (const auto& g : maps) {
      std::vector<int> fg(s.n);
      for (int x = 0; x < s.n; ++x) fg[x] = f[g[x]];
      CHECK(std::find(maps.begin(), maps.end(), fg) != maps.end());
    }
}

TEST_CASE("relation_preserving_maps: identity and constants always present") {
  for (const finite_algebra& a : {klein_xor(), sym3(), no_ops(3)}) {
    rel_structure s =
        rel_structure::from_congruences(enumerate_congruences(a));
    auto maps = relation_preserving_maps(s);
    std::vector<int> id(s.n);
    for (int x = 0; x < s.n; ++x) id[x] = x;
    CHECK(std::find(maps.begin(), maps.end(), id) != maps.end());
    for (int c = 0; c < s.n; ++c) {
      std::vector<int> constant(s.n, c);
      CHECK(std::find(maps.begin(), maps.end(), constant) != maps.end());
    }
  }
}

TEST_CASE("relation_preserving_maps: carrier bound enforced") {
  rel_structure s;
  s.n = 13;
  s.relations = {partition::identity(13)};
  CHECK_THROWS_AS(relation_preserving_maps(s), size_error);
}

TEST_CASE("premise_holds: trivial shapes") {
  rel_structure s = klein_congruence_family();
  CHECK(premise_holds(s, 0, 1, 0, 1));
  CHECK(premise_holds(s, 0, 1, 2, 2));
  CHECK(premise_holds(s, 3, 3, 2, 2));
}

TEST_CASE("premise_holds: matches principal congruence membership") {
  for (const finite_algebra& a : {klein_xor(), cyclic_group(4), sym3()}) {
    rel_structure s =
        rel_structure::from_congruences(enumerate_congruences(a));
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y) {
        partition principal = principal_congruence(a, x, y);
        for (int c = 0; c < a.n; ++c)
          for (int d = 0; d < a.n; ++d)
            CHECK(premise_holds(s, x, y, c, d) == principal.same(c, d));
      }
  }
}

TEST_CASE("malcev_chain: identity quadruple has a direct chain") {
  rel_structure s = klein_congruence_family();
  auto w = malcev_chain(s, 0, 1, 0, 1);
  REQUIRE(w.has_value());
  CHECK(w->length() == 0);
  CHECK(verify_chain(s, 0, 1, 0, 1, *w));
}

TEST_CASE("malcev_chain: translation carries (0,1) to (2,3) in one map") {
  rel_structure s = klein_congruence_family();
  auto w = malcev_chain(s, 0, 1, 2, 3);
  REQUIRE(w.has_value());
  CHECK(w->length() == 0);
  REQUIRE(w->maps.size() == 1);
  CHECK(((w->maps[0][0] == 2 && w->maps[0][1] == 3) ||
         (w->maps[0][0] == 3 && w->maps[0][1] == 2)));
  CHECK(verify_chain(s, 0, 1, 2, 3, *w));
}

TEST_CASE("malcev_chain: rejected when the premise fails") {
  rel_structure s = klein_congruence_family();
  // 0 ~ 1 under the first medium congruence, but (1,2) is not in it
  CHECK_THROWS_AS(malcev_chain(s, 0, 1, 1, 2), domain_error);
}

TEST_CASE("malcev_chain: agreement with an independent closure oracle") {
  rel_structure s = klein_congruence_family();
  auto maps = relation_preserving_maps(s);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (!premise_holds(s, a, b, c, d)) continue;
          auto w = malcev_chain(s, a, b, c, d, &maps);
          CHECK(w.has_value() == closure_reaches(s, maps, a, b, c, d));
          if (w) CHECK(verify_chain(s, a, b, c, d, *w));
        }
}

TEST_CASE("malcev_chain: set equality admits swapped pairs") {
  // family with one middle relation on 3 points; the map (a,b) -> (b,a)
  // realizes a swapped step
  rel_structure s;
  s.n = 2;
  s.relations = {partition::identity(2)};
  auto w = malcev_chain(s, 0, 1, 1, 0);
  REQUIRE(w.has_value());
  CHECK(verify_chain(s, 0, 1, 1, 0, *w));
}

TEST_CASE("homogeneity_check: one point structure") {
  rel_structure s;
  s.n = 1;
  s.relations = {partition::identity(1)};
  CHECK(homogeneity_check(s).homogeneous);
}

TEST_CASE("homogeneity_check: congruence families of small algebras") {
  for (const finite_algebra& a :
       {klein_xor(), cyclic_group(6), sym3(), no_ops(3),
        lattice_algebra(make_standard(lattice_family::chain, 3))}) {
    rel_structure s =
        rel_structure::from_congruences(enumerate_congruences(a));
    homogeneity_report rep = homogeneity_check(s);
    CHECK(rep.homogeneous);
    for (const auto& rec : rep.witnesses)
      CHECK(verify_chain(s, rec.quad[0], rec.quad[1], rec.quad[2], rec.quad[3],
                         rec.chain));
  }
}

TEST_CASE("homogeneity_check: adversarial non-congruence family fails") {
  // congruences of the Klein group plus one non-congruence partition;
  // the polluted family separates the premise from reachability
  finite_algebra a = klein_xor();
  rel_structure s = klein_congruence_family();
  partition tau = partition::from_blocks(4, {{0, 1}, {2}, {3}});
  REQUIRE(!is_congruence(a, tau).ok);
  s.relations.push_back(tau);
  homogeneity_report rep = homogeneity_check(s);
  CHECK(!rep.homogeneous);
  CHECK(rep.counterexample[0] >= 0);
  // the reported quadruple satisfies the premise yet has no chain
  auto [qa, qb, qc, qd] = rep.counterexample;
  CHECK(premise_holds(s, qa, qb, qc, qd));
  CHECK(!malcev_chain(s, qa, qb, qc, qd).has_value());
}

TEST_CASE("homogeneity_check: random congruence families stay homogeneous") {
  lcg rng(0xfeed);
  for (int trial = 0; trial < 12; ++trial) {
    finite_algebra a = random_algebra(rng, 3 + rng.next(2), 1 + rng.next(2));
    rel_structure s =
        rel_structure::from_congruences(enumerate_congruences(a));
    homogeneity_report rep = homogeneity_check(s);
    CHECK(rep.homogeneous);
    for (const auto& rec : rep.witnesses)
      CHECK(verify_chain(s, rec.quad[0], rec.quad[1], rec.quad[2], rec.quad[3],
                         rec.chain));
  }
}

TEST_CASE("homogeneity_check: rep stage structure has the identity at zero") {
  finite_lattice c2 = make_standard(lattice_family::chain, 2);
  rep_sequence r = build_rep_sequence(c2, 1, default_variant, 1, 1 << 20);
  rel_structure s = rel_structure::from_stage(r, 1);
  CHECK(s.relations[c2.unit] == partition::identity(s.n));
  CHECK(homogeneity_check(s).homogeneous);
}
