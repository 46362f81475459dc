#pragma once

#include <optional>
#include <vector>

#include "latrep/algebra.hpp"
#include "latrep/usl.hpp"

namespace latrep {

// Order isomorphism (bijection preserving <= both ways) between the derived
// orders, or nullopt. Backtracking over bijections with degree/height
// pruning; the returned map is the lexicographically least one.
std::optional<std::vector<int>> lattice_isomorphic(const finite_usl& a,
                                                   const finite_usl& b);

struct clfa_verdict {
  bool ok = false;
  std::vector<int> witness;  // congruence index -> lattice element
  congruence_lattice conlat;
};

// Is the given lattice isomorphic to the congruence lattice of the given
// algebra? Emits the congruence lattice and, when isomorphic, the witness.
clfa_verdict clfa_verify(const finite_usl& l, const finite_algebra& a,
                         const congruence_limits& limits = {});

}  // namespace latrep
