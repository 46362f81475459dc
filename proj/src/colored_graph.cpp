#include "latrep/colored_graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "latrep/errors.hpp"

namespace latrep {

int colored_graph::max_stage() const {
  int s = 0;
  for (int v : vertex_stage) s = std::max(s, v);
  return s;
}

int colored_graph::edge_stage(const colored_edge& e) const {
  return std::max(vertex_stage[e.u], vertex_stage[e.v]);
}

void validate(const colored_graph& g, const finite_usl& l) {
  validate_shape(l);
  if (g.lattice_n != l.n)
    throw format_error("graph colored over a different lattice size");
  for (int s : g.vertex_stage)
    if (s < 0) throw format_error("negative vertex stage");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count() || e.v >= g.vertex_count())
      throw format_error("edge endpoint out of range");
    if (e.u == e.v) throw format_error("loop edge");
    if (e.u > e.v) throw format_error("edge endpoints not normalized");
    if (e.color < 0 || e.color >= l.n)
      throw format_error("edge color out of range");
    if (e.color == l.unit) throw format_error("edge colored zero");
    if (!seen.insert({e.u, e.v, e.color}).second)
      throw format_error("duplicate edge triple");
  }
}

colored_graph pudlak_seed(const finite_usl& l, int color) {
  validate_shape(l);
  if (color < 0 || color >= l.n) throw domain_error("seed color out of range");
  if (color == l.unit)
    throw domain_error("invalid seed color: must differ from zero");
  colored_graph g;
  g.lattice_n = l.n;
  g.vertex_stage = {0, 0};
  g.edges = {{0, 1, color}};
  return g;
}

rule_variant parse_variant(const std::string& name) {
  if (name == "A" || name == "a") return rule_variant::a;
  if (name == "B" || name == "b") return rule_variant::b;
  throw format_error("unknown rule variant: " + name);
}

std::string variant_name(rule_variant v) {
  return v == rule_variant::a ? "A" : "B";
}

bool pentagon_admissible(const finite_usl& l, rule_variant v, int host, int y,
                         int z) {
  if (y == l.unit || z == l.unit) return false;
  if (v == rule_variant::a) return l.leq(z, l.op(host, y));
  return l.leq(host, l.op(y, z));
}

std::vector<std::pair<int, int>> admissible_pairs(const finite_usl& l,
                                                  rule_variant v, int host) {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < l.n; ++y)
    for (int z = 0; z < l.n; ++z)
      if (pentagon_admissible(l, v, host, y, z)) out.emplace_back(y, z);
  return out;
}

colored_graph pudlak_expand(const finite_usl& l, const colored_graph& g,
                            rule_variant v, int max_vertices,
                            expand_stats* stats) {
  validate(g, l);
  colored_graph out = g;
  const int top = g.max_stage();
  expand_stats st;

  auto add_edge = [&out](int a, int b, int color) {
    out.edges.push_back({std::min(a, b), std::max(a, b), color});
  };

  const int old_edge_count = g.edge_count();
  for (int e = 0; e < old_edge_count; ++e) {
    const colored_edge& host = g.edges[e];
    if (g.edge_stage(host) != top) continue;
    for (auto [y, z] : admissible_pairs(l, v, host.color)) {
      if (out.vertex_count() + 3 > max_vertices)
        throw size_error("expansion would exceed vertex cap " +
                         std::to_string(max_vertices));
      int w1 = out.vertex_count();
      out.vertex_stage.insert(out.vertex_stage.end(), 3, top + 1);
      add_edge(host.u, w1, y);
      add_edge(w1, w1 + 1, z);
      add_edge(w1 + 1, w1 + 2, y);
      add_edge(w1 + 2, host.v, z);
      ++st.pentagons;
    }
  }
  st.new_vertices = out.vertex_count() - g.vertex_count();
  st.new_edges = out.edge_count() - g.edge_count();
  if (stats) *stats = st;
  return out;
}

partition equiv_relation(const colored_graph& g, const finite_usl& l, int m) {
  validate(g, l);
  if (m < 0 || m >= l.n) throw domain_error("relation color out of range");
  union_find uf(g.vertex_count());
  for (const auto& e : g.edges)
    if (l.leq(e.color, m)) uf.unite(e.u, e.v);
  return uf.to_partition();
}

rep_functions extract_functions(const colored_graph& g, const finite_usl& l) {
  rep_functions r;
  r.f.reserve(l.n);
  for (int k = 0; k < l.n; ++k) {
    partition p = equiv_relation(g, l, k);
    std::vector<int> fk(g.vertex_count());
    for (int x = 0; x < g.vertex_count(); ++x) fk[x] = p.rep(x);
    r.f.push_back(std::move(fk));
  }
  return r;
}

}  // namespace latrep
