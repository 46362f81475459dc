#pragma once

#include <string>
#include <vector>

#include "latrep/hom.hpp"
#include "latrep/usl.hpp"

namespace latrep {

struct ideal_verdict {
  bool ok = true;
  std::string reason;  // "empty", "not downward closed", "not join closed"
  int witness_a = -1;
  int witness_b = -1;
};

// Nonempty, downward closed, closed under join. On failure the witness is
// the violating pair: (a,b) with a <= b in S's complement story, or the
// joined pair whose join escapes.
ideal_verdict is_ideal(const finite_usl& l, const std::vector<int>& subset);

struct quotient_result {
  finite_usl quotient;
  usl_hom projection;  // surjective, kernel (preimage of unit) = the ideal
};

// Quotient by the relation  a E b  iff  a*i == b*i  for some i in the
// ideal; equivalently a*m == b*m for m the ideal's greatest element.
// Classes are numbered by their least member's image, in increasing order.
quotient_result quotient_by_ideal(const finite_usl& l,
                                  const std::vector<int>& ideal_members);

}  // namespace latrep
