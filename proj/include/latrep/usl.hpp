#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace latrep {

using op_table = std::vector<std::vector<int>>;

// Finite unital semilattice: carrier 0..n-1, a total join table, a designated
// unit (the least element) and an optional designated bound (the greatest).
// The order is always derived from the join table: a <= b iff a*b == b.
struct finite_usl {
  int n = 0;
  op_table join;
  int unit = 0;
  std::optional<int> bound;

  int op(int a, int b) const { return join[a][b]; }
  bool leq(int a, int b) const { return join[a][b] == b; }

  // Join of the whole carrier. Every finite usl has one, designated or not.
  int top() const;

  // Join of a subset; `unit` when empty.
  int join_all(const std::vector<int>& elems) const;

  bool operator==(const finite_usl&) const = default;
};

// Finite lattice: an usl together with a total meet table.
struct finite_lattice : finite_usl {
  op_table meet;

  int meet_op(int a, int b) const { return meet[a][b]; }

  bool operator==(const finite_lattice&) const = default;
};

// Throws format_error unless the tables are square, total and in range.
void validate_shape(const finite_usl& s);
void validate_shape(const finite_lattice& s);

// One row of an axiom report. Equations are numbered as usual for a bounded
// unital semilattice: 1 associativity, 2 commutativity, 3 idempotence,
// 4 unit law, 5 bound law.
struct axiom_check {
  int equation = 0;
  std::string name;
  bool applicable = true;  // eq 5 is skipped when no bound is designated
  bool pass = true;
  std::array<int, 3> witness{-1, -1, -1};
};

struct axiom_report {
  std::vector<axiom_check> checks;

  bool pass() const;
  const axiom_check* first_failure() const;
};

// Checks equations 1-5 on a candidate structure, exhaustively over all
// triples/pairs, and reports a witness for every failing equation.
axiom_report check_busl_axioms(const finite_usl& s);

enum class lattice_family { chain, boolean, mn, n5 };

lattice_family parse_family(const std::string& name);
std::string family_name(lattice_family f);

// Standard test lattices with canonical numbering (bottom = 0, top = n-1).
//   chain(k):   k-element chain
//   boolean(k): 2^k subsets ordered by inclusion (element = bitmask)
//   mn(k):      antichain of k atoms plus top and bottom
//   n5:         the pentagon (param ignored)
finite_lattice make_standard(lattice_family family, int param);

// Completes an usl to a lattice by computing all meets from the derived
// order, and designates the bound. Throws domain_error if some pair has no
// greatest lower bound (possible only when the join table is not an usl).
finite_lattice as_lattice(const finite_usl& s);

// Order-reversed lattice on the same carrier: join and meet swap, unit and
// bound swap. An involution, element-wise.
finite_lattice dual(const finite_lattice& l);

}  // namespace latrep
