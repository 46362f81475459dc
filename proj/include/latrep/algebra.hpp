#pragma once

#include <span>
#include <vector>

#include "latrep/partition.hpp"
#include "latrep/usl.hpp"

namespace latrep {

// One finitary operation: a flat row-major table of size n^arity.
// Arity 0 is a constant (table holds the single value).
struct operation {
  int arity = 0;
  std::vector<int> table;
};

struct finite_algebra {
  int n = 0;
  std::vector<operation> ops;

  int apply(int op_index, std::span<const int> args) const;
};

// Throws format_error on table size/range problems.
void validate_shape(const finite_algebra& a);

struct congruence_verdict {
  bool ok = true;
  int op_index = -1;
  // Tuples differing in one argument whose values land in different blocks.
  std::vector<int> tuple_x, tuple_y;
};

// Compatibility of the partition with every operation, one argument
// position at a time (equivalent to the all-positions form by induction).
congruence_verdict is_congruence(const finite_algebra& a, const partition& p);

// Least congruence containing (a,b): close the pair under all one-argument
// translations of the operations, then under equivalence, to a fixpoint.
partition principal_congruence(const finite_algebra& a, int x, int y);

struct congruence_limits {
  int max_carrier = 16;
  int max_congruences = 100000;
};

// All congruences, as the join closure of the principal ones, sorted by
// (pair count, canonical form) so index 0 is the identity partition and the
// last index is the single block. Join/meet tables are partition join/meet.
struct congruence_lattice {
  std::vector<partition> members;
  finite_lattice lattice;

  int index_of(const partition& p) const;  // -1 when absent
};

congruence_lattice enumerate_congruences(const finite_algebra& a,
                                         const congruence_limits& limits = {});

}  // namespace latrep
