#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latrep/partition.hpp"
#include "latrep/usl.hpp"

namespace latrep {

// Undirected edge with endpoints normalized u < v. Colors are elements of
// the ambient usl other than its unit ("nonzero").
struct colored_edge {
  int u = 0;
  int v = 0;
  int color = 0;

  bool operator==(const colored_edge&) const = default;
};

// Staged colored graph. Vertices are numbered in creation order, so the
// stage-j graph is a prefix of the stage-(j+1) graph; the stage of an edge
// is the larger creation stage of its endpoints.
struct colored_graph {
  int lattice_n = 0;
  std::vector<int> vertex_stage;
  std::vector<colored_edge> edges;

  int vertex_count() const { return static_cast<int>(vertex_stage.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int max_stage() const;
  int edge_stage(const colored_edge& e) const;

  bool operator==(const colored_graph&) const = default;
};

// Endpoint/color range checks, nonzero colors, no duplicate (u,v,color).
void validate(const colored_graph& g, const finite_usl& l);

// Two stage-0 vertices joined by one edge of the given nonzero color.
colored_graph pudlak_seed(const finite_usl& l, int color);

// Which (y,z) pairs of nonzero colors earn a pentagon across an edge
// colored `host`. Variant A follows the attachment rule with the new pair
// subordinate to the host's join (z <= host*y); variant B is the dual
// reading where the host is subordinate (host <= y*z).
enum class rule_variant { a, b };

rule_variant parse_variant(const std::string& name);
std::string variant_name(rule_variant v);
constexpr rule_variant default_variant = rule_variant::b;

bool pentagon_admissible(const finite_usl& l, rule_variant v, int host, int y,
                         int z);
// Ordered admissible pairs for one host color, lexicographic.
std::vector<std::pair<int, int>> admissible_pairs(const finite_usl& l,
                                                  rule_variant v, int host);

struct expand_stats {
  int pentagons = 0;
  int new_vertices = 0;
  int new_edges = 0;
};

// One stage of growth: every edge created at the current top stage gets,
// for each admissible ordered pair (y,z), three fresh vertices w1,w2,w3 and
// the zigzag u-y-w1-z-w2-y-w3-z-v, closing a pentagon with the host edge.
// Earlier edges already received their pentagons in earlier stages, so
// each (edge, y, z) triple is realized exactly once over the whole chain.
// Fresh vertices are numbered in (edge index, y, z) order.
colored_graph pudlak_expand(const finite_usl& l, const colored_graph& g,
                            rule_variant v, int max_vertices,
                            expand_stats* stats = nullptr);

// Connectivity through edges whose color is <= m in l; m = unit gives the
// identity partition.
partition equiv_relation(const colored_graph& g, const finite_usl& l, int m);

// Representative tables f[k][x] = least vertex of the class of x under the
// relation for color k, for every k in l. x and y are related exactly when
// f[k][x] == f[k][y].
struct rep_functions {
  std::vector<std::vector<int>> f;
};

rep_functions extract_functions(const colored_graph& g, const finite_usl& l);

}  // namespace latrep
