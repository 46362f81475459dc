#include "latrep/hom.hpp"

#include "doctest.h"
#include "latrep/errors.hpp"

using namespace latrep;

namespace {

// 0 -> 0, 1 -> top of the 3-chain.
usl_hom chain2_to_chain3() {
  usl_hom h;
  h.source = make_standard(lattice_family::chain, 2);
  h.target = make_standard(lattice_family::chain, 3);
  h.map = {0, 2};
  h.kind = hom_kind::usl;
  return h;
}

}  // namespace

TEST_CASE("check_hom: identity is a hom of both kinds") {
  finite_lattice m3 = make_standard(lattice_family::mn, 3);
  CHECK(check_hom(identity_hom(m3, hom_kind::usl)).ok);
  CHECK(check_hom(identity_hom(m3, hom_kind::busl)).ok);
}

TEST_CASE("check_hom: constant-to-unit is an usl hom but not a busl hom") {
  finite_lattice b2 = make_standard(lattice_family::boolean, 2);
  std::vector<int> to_unit(b2.n, b2.unit);
  CHECK(check_hom(b2, b2, to_unit, hom_kind::usl).ok);
  hom_verdict v = check_hom(b2, b2, to_unit, hom_kind::busl);
  CHECK(!v.ok);
  CHECK(v.reason == "bound not preserved");
}

TEST_CASE("check_hom: a broken pair is reported") {
  finite_lattice b2 = make_standard(lattice_family::boolean, 2);
  std::vector<int> map = {0, 1, 2, 2};  // join(1,2)=3 but map(1)*map(2)=3 != map(3)=2
  hom_verdict v = check_hom(b2, b2, map, hom_kind::usl);
  CHECK(!v.ok);
  CHECK(v.reason == "join not preserved");
  CHECK(v.witness_a == 1);
  CHECK(v.witness_b == 2);
}

TEST_CASE("galois_adjoint: identity adjoints to identity") {
  finite_lattice m3 = make_standard(lattice_family::mn, 3);
  usl_hom adj = galois_adjoint(identity_hom(m3));
  for (int x = 0; x < m3.n; ++x) CHECK(adj.map[x] == x);
  CHECK(adj.source == dual(m3));
  CHECK(adj.target == dual(m3));
}

TEST_CASE("galois_adjoint: brute-force values for 2-chain into 3-chain") {
  usl_hom f = chain2_to_chain3();
  usl_hom adj = galois_adjoint(f);
  CHECK(adj.map == std::vector<int>{0, 0, 1});
}

TEST_CASE("galois_adjoint: the defining equivalence holds on all pairs") {
  usl_hom f = chain2_to_chain3();
  usl_hom adj = galois_adjoint(f);
  for (int a = 0; a < f.source.n; ++a)
    for (int x = 0; x < f.target.n; ++x)
      CHECK(f.target.leq(f.map[a], x) == f.source.leq(a, adj.map[x]));
}

TEST_CASE("galois_adjoint: adjoint of the adjoint is the original map") {
  usl_hom f = chain2_to_chain3();
  usl_hom back = galois_adjoint(galois_adjoint(f));
  CHECK(back.map == f.map);
  CHECK(back.source == as_lattice(f.source));
  CHECK(back.target == as_lattice(f.target));
}

TEST_CASE("galois_adjoint: contravariant over composition") {
  // 2-chain -> B_2 (atom embedding) -> M_3 embedding of B_2.
  usl_hom f;
  f.source = make_standard(lattice_family::chain, 2);
  f.target = make_standard(lattice_family::boolean, 2);
  f.map = {0, 1};
  usl_hom g;
  g.source = make_standard(lattice_family::boolean, 2);
  g.target = make_standard(lattice_family::mn, 3);
  g.map = {0, 1, 2, 4};
  REQUIRE(check_hom(f).ok);
  REQUIRE(check_hom(g).ok);
  usl_hom lhs = galois_adjoint(compose(g, f));
  usl_hom rhs = compose(galois_adjoint(f), galois_adjoint(g));
  CHECK(lhs.map == rhs.map);
}

TEST_CASE("galois_adjoint: non-hom is rejected") {
  finite_lattice b2 = make_standard(lattice_family::boolean, 2);
  usl_hom bad{b2, b2, {0, 1, 2, 2}, hom_kind::usl};
  CHECK_THROWS_AS(galois_adjoint(bad), domain_error);
}

TEST_CASE("compose: endpoint mismatch rejected") {
  usl_hom f = chain2_to_chain3();
  CHECK_THROWS_AS(compose(f, f), domain_error);
}

TEST_CASE("galois_adjoint: laws hold for every hom between small lattices") {
  std::vector<finite_lattice> pool = {
      make_standard(lattice_family::chain, 2),
      make_standard(lattice_family::chain, 3),
      make_standard(lattice_family::boolean, 2),
      make_standard(lattice_family::mn, 3),
  };
  int homs_seen = 0;
  for (const auto& src : pool)
    for (const auto& tgt : pool) {
      // walk all maps src -> tgt by counting in base tgt.n
      std::vector<int> map(src.n, 0);
      while (true) {
        if (check_hom(src, tgt, map, hom_kind::usl).ok) {
          ++homs_seen;
          usl_hom h{src, tgt, map, hom_kind::usl};
          usl_hom adj = galois_adjoint(h);
          for (int a = 0; a < src.n; ++a)
            for (int x = 0; x < tgt.n; ++x)
              CHECK(tgt.leq(map[a], x) == src.leq(a, adj.map[x]));
          CHECK(galois_adjoint(adj).map == map);
        }
        int i = src.n - 1;
        for (; i >= 0; --i) {
          if (++map[i] < tgt.n) break;
          map[i] = 0;
        }
        if (i < 0) break;
      }
    }
  CHECK(homs_seen > 100);
}

TEST_CASE("galois_adjoint: kind reflects bound preservation of the dual map") {
  finite_lattice m3 = make_standard(lattice_family::mn, 3);
  CHECK(galois_adjoint(identity_hom(m3)).kind == hom_kind::busl);
  // collapsing everything to the unit gives an adjoint sending the dual
  // bound to the dual top, which is not the dual bound
  finite_lattice b2 = make_standard(lattice_family::boolean, 2);
  usl_hom collapse{b2, b2, {0, 0, 0, 0}, hom_kind::usl};
  usl_hom adj = galois_adjoint(collapse);
  CHECK(check_hom(adj.source, adj.target, adj.map, hom_kind::usl).ok);
  CHECK(adj.kind == hom_kind::usl);
}
