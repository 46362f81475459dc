#pragma once

#include <vector>

#include "latrep/hom.hpp"
#include "latrep/usl.hpp"

namespace latrep {

// Finite truncation of a chain L_0 -> L_1 -> ... of usls along homs;
// homs[i] maps levels[i] into levels[i+1].
struct direct_system {
  std::vector<finite_usl> levels;
  std::vector<usl_hom> homs;
};

// Endpoint consistency plus check_hom on every link.
void validate(const direct_system& d);

// Pushforward of element a from level i to level j >= i.
int push_forward(const direct_system& d, int i, int a, int j);

struct limit_verdict {
  bool equal = false;
  // Level where the pushforwards first agree, or the depth that was
  // examined without agreement. "Distinct up to depth" is not a proof of
  // limit inequality.
  int level = -1;
};

limit_verdict limit_equal(const direct_system& d, int i, int a, int j, int b,
                          int depth);

}  // namespace latrep
