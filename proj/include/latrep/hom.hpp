#pragma once

#include <string>
#include <vector>

#include "latrep/usl.hpp"

namespace latrep {

enum class hom_kind { usl, busl };

// Homomorphism between finite usls, stored with value copies of its
// endpoints so that a hom is self-contained and immutable.
struct usl_hom {
  finite_usl source;
  finite_usl target;
  std::vector<int> map;
  hom_kind kind = hom_kind::usl;

  int operator()(int a) const { return map[a]; }

  bool operator==(const usl_hom&) const = default;
};

struct hom_verdict {
  bool ok = true;
  std::string reason;  // empty when ok
  int witness_a = -1;  // pair breaking join preservation, or single element
  int witness_b = -1;
};

// True iff map is total, preserves join and unit, and (for busl kind)
// preserves the bound of both sides. Reports the first violation found.
hom_verdict check_hom(const finite_usl& source, const finite_usl& target,
                      const std::vector<int>& map, hom_kind kind);
hom_verdict check_hom(const usl_hom& h);

usl_hom identity_hom(const finite_usl& s, hom_kind kind = hom_kind::usl);

// g after f; requires f.target == g.source.
usl_hom compose(const usl_hom& g, const usl_hom& f);

// Galois adjoint of a join- and unit-preserving map between finite lattices:
// the unique map satisfying  f(a) <= x  iff  a <= adjoint(x),
// realized as adjoint(x) = join{ a : f(a) <= x }. The result is a hom from
// dual(target) to dual(source); taking the adjoint twice gives back f.
usl_hom galois_adjoint(const usl_hom& f);

}  // namespace latrep
