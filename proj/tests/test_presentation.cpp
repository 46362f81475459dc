#include "latrep/presentation.hpp"

#include "doctest.h"
#include "latrep/errors.hpp"

using namespace latrep;

namespace {

// Carrier {0,1,2}: 0 and 1 mutually comparable, 2 above both; join picks
// the greater by the preorder.
presented_usl collapsing() {
  presented_usl p;
  p.m = 3;
  p.preorder = {{true, true, true}, {true, true, true}, {false, false, true}};
  p.joinop = {{0, 0, 2}, {0, 1, 2}, {2, 2, 2}};
  return p;
}

}  // namespace

TEST_CASE("quotient_presentation: mutual comparability collapses") {
  presentation_result r = quotient_presentation(collapsing());
  CHECK(r.usl.n == 2);
  CHECK(r.class_of == std::vector<int>{0, 0, 1});
  CHECK(r.usl.unit == 0);
  CHECK(r.usl.leq(0, 1));
  CHECK(check_busl_axioms(r.usl).pass());
}

TEST_CASE("quotient_presentation: antisymmetric preorder keeps everything") {
  finite_lattice b2 = make_standard(lattice_family::boolean, 2);
  presented_usl p;
  p.m = b2.n;
  p.preorder.assign(p.m, std::vector<bool>(p.m, false));
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b) p.preorder[a][b] = b2.leq(a, b);
  p.joinop = b2.join;
  presentation_result r = quotient_presentation(p);
  CHECK(r.usl.n == p.m);
  for (int a = 0; a < p.m; ++a) CHECK(r.class_of[a] == a);
  CHECK(r.usl.join == b2.join);
}

TEST_CASE("quotient_presentation: join incompatible with collapsed classes") {
  presented_usl p = collapsing();
  // class(0) == class(1) but join(0,0)=0 while join(0,1)=2
  p.joinop = {{0, 2, 2}, {2, 1, 2}, {2, 2, 2}};
  CHECK_THROWS_AS(quotient_presentation(p), domain_error);
}

TEST_CASE("quotient_presentation: non-transitive preorder rejected") {
  presented_usl p;
  p.m = 3;
  p.preorder = {{true, true, false}, {false, true, true}, {false, false, true}};
  p.joinop = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  CHECK_THROWS_AS(validate(p), domain_error);
}

TEST_CASE("quotient_presentation: no least class rejected") {
  presented_usl p;
  p.m = 2;  // two incomparable points
  p.preorder = {{true, false}, {false, true}};
  p.joinop = {{0, 0}, {0, 1}};
  CHECK_THROWS_AS(quotient_presentation(p), domain_error);
}
