#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latrep/algebra.hpp"
#include "latrep/partition.hpp"
#include "latrep/rep_sequence.hpp"

namespace latrep {

// A carrier together with a finite family of equivalence relations, indexed
// 0..family-1. Built from a congruence lattice (one relation per member) or
// from one stage of a representation chain (one relation per color).
struct rel_structure {
  int n = 0;
  std::vector<partition> relations;

  static rel_structure from_congruences(const congruence_lattice& cl);
  static rel_structure from_stage(const rep_sequence& r, int stage);
};

void validate(const rel_structure& s);

struct map_enum_limits {
  int max_carrier = 12;
  long max_maps = 2000000;
};

// All self-maps f with x ~k y implying f(x) ~k f(y) for every relation k.
// Backtracking with per-element candidate pruning; lexicographic order.
// Always contains the identity and the constant maps, and is closed under
// composition.
std::vector<std::vector<int>> relation_preserving_maps(
    const rel_structure& s, const map_enum_limits& limits = {});

// For each relation k: a ~k b implies c ~k d.
bool premise_holds(const rel_structure& s, int a, int b, int c, int d);

// Chain of relation-preserving maps carrying the pair {a,b} stepwise from
// c to d: maps[0] sends {a,b} onto {c, z1}, maps[i] onto {z_i, z_{i+1}},
// maps[n] onto {z_n, d}. Zero intermediates means a single map sends {a,b}
// onto {c,d}. Pair conditions are set equalities, never ordered.
struct witness_chain {
  std::vector<int> intermediates;
  std::vector<std::vector<int>> maps;

  int length() const { return static_cast<int>(intermediates.size()); }
};

// Shortest chain via breadth-first search over the graph whose edges are
// {f(a), f(b)}; ties broken toward least witness elements and least map.
// Requires premise_holds(s,a,b,c,d); nullopt when no chain exists.
// Pass the precomputed map set to amortize across quadruples.
std::optional<witness_chain> malcev_chain(
    const rel_structure& s, int a, int b, int c, int d,
    const std::vector<std::vector<int>>* maps = nullptr,
    const map_enum_limits& limits = {});

// Re-checks a chain against the definition only: each map preserves every
// relation, and the endpoint set equalities hold. Independent of the search.
bool verify_chain(const rel_structure& s, int a, int b, int c, int d,
                  const witness_chain& w);

struct chain_record {
  std::array<int, 4> quad{};
  witness_chain chain;
};

struct homogeneity_report {
  bool homogeneous = true;
  long quadruples = 0;       // all (a,b,c,d)
  long premise_count = 0;    // those where the premise holds
  int max_chain_length = 0;  // intermediates, over realized chains
  std::array<int, 4> counterexample{-1, -1, -1, -1};
  std::vector<chain_record> witnesses;
};

// Runs malcev_chain over every quadruple whose premise holds; homogeneous
// iff every one has a chain. Witnesses are retained for re-verification.
homogeneity_report homogeneity_check(const rel_structure& s,
                                     const map_enum_limits& limits = {});

}  // namespace latrep
