#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latrep/colored_graph.hpp"
#include "latrep/direct_system.hpp"
#include "latrep/hom.hpp"
#include "latrep/usl.hpp"

namespace latrep {

// Chain of staged colored graphs over one lattice, each stage extending the
// previous one vertex- and edge-wise. stages[j] is the whole graph built
// through stage j.
struct rep_sequence {
  finite_lattice lattice;
  int seed_color = 0;
  rule_variant variant = default_variant;
  std::vector<colored_graph> stages;
  std::vector<expand_stats> stats;  // stats[j] describes stage j -> j+1
  bool capped = false;              // growth stopped by the vertex cap

  int stage_count() const { return static_cast<int>(stages.size()); }
};

// Builds stages 0..wanted_stages, stopping early (capped = true) when the
// next stage would exceed max_vertices.
rep_sequence build_rep_sequence(const finite_lattice& l, int seed_color,
                                rule_variant v, int wanted_stages,
                                int max_vertices);

// Reconstructs the per-stage chain of a graph from its vertex stage tags.
rep_sequence sequence_from_graph(const finite_lattice& l,
                                 const colored_graph& g, rule_variant v,
                                 int seed_color);

struct persistence_verdict {
  bool ok = true;
  int stage = -1;           // earliest violating stage pair (j vs j+1)
  int witness_vertex = -1;  // x with f_k changing between the stages
  int rep_before = -1;
  int rep_after = -1;
};

// Does f_k at stage j+1, restricted to stage-j vertices, equal f_k at
// stage j?
persistence_verdict check_persistence(const rep_sequence& r, int k, int j);
// Scans all adjacent stage pairs and reports the earliest violation.
persistence_verdict check_persistence_all(const rep_sequence& r, int k);

struct separation_record {
  int m = 0, n = 0;     // m not below n
  bool found = false;
  int stage = -1;       // first stage where a witness pair exists
  int x = -1, y = -1;   // least such pair at that stage
};

struct stabilization_record {
  int stage = 0;  // stage whose related pairs are tracked
  int m = 0, n = 0;
  bool conclusive = false;
  int stabilized_at = -1;  // least stage >= stage covering all pairs
  int depth = -1;          // stabilized_at - stage
};

struct stage_checks {
  int stage = 0;
  bool zero_identity = true;
  bool monotone = true;
  int mono_m = -1, mono_n = -1;  // witness color pair on failure
  bool meet_fidelity = true;
  int meet_m = -1, meet_n = -1;
};

// Verification report for a representation chain: per-stage exact checks
// (relations monotone in the color order, meet compatibility, zero =
// identity), separation witnesses for incomparable colors, and the stage
// at which join relations are caught up by the partition join.
struct rep_report {
  int depth = 0;
  std::vector<stage_checks> per_stage;
  std::vector<separation_record> separations;
  std::vector<stabilization_record> stabilizations;

  bool exact_ok() const;
  bool separations_ok() const;
  // Largest conclusive stabilization depth, -1 when none tracked.
  int max_stabilization_depth() const;
  // True when some pair is not yet stabilized within the built stages.
  bool has_inconclusive() const;
};

rep_report rep_verify(const rep_sequence& r, int depth);

// Same vertices and edges with every color pushed through the hom; rejects
// homs sending a used color to zero.
colored_graph recolor_embed(const usl_hom& h, const colored_graph& g);

// Representation data for a direct system, one chain per level over the
// dual of that level, connected by the Galois adjoints of the system homs.
struct dual_sequence {
  std::vector<finite_lattice> dual_levels;
  std::vector<rep_sequence> reps;
  std::vector<usl_hom> adjoints;  // adjoints[i]: dual_levels[i+1] -> dual_levels[i]
  // recolored[i][j]: stage j of level i+1, recolored into level i's colors.
  std::vector<std::vector<colored_graph>> recolored;
  // shift[i][j]: least stage of reps[i] at least as large as recolored[i][j],
  // -1 when no built stage fits.
  std::vector<std::vector<int>> shift;
};

// seed: seed color for the deepest level's dual; earlier levels seed with
// the adjoint image. Default (nullopt) seeds the deepest dual with its own
// greatest element.
dual_sequence build_dual_sequence(const direct_system& d, int stages,
                                  int max_vertices,
                                  std::optional<int> deepest_seed = {},
                                  rule_variant v = default_variant);

}  // namespace latrep
