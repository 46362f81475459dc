#pragma once

#include <vector>

#include "latrep/usl.hpp"

namespace latrep {

// A carrier with a reflexive transitive relation and a total binary
// operation. The usl it presents is the quotient by mutual comparability.
struct presented_usl {
  int m = 0;
  std::vector<std::vector<bool>> preorder;
  op_table joinop;
};

// Throws format_error for ragged tables, domain_error if the relation is
// not reflexive or not transitive.
void validate(const presented_usl& p);

struct presentation_result {
  finite_usl usl;
  std::vector<int> class_of;  // carrier element -> quotient element
};

// Collapses mutually comparable elements, induces order and join on the
// classes, and checks that the result is an usl (unit = least class,
// equations 1-4, join table consistent with the induced order). Throws
// domain_error naming a witness when the join operation is incompatible.
presentation_result quotient_presentation(const presented_usl& p);

}  // namespace latrep
