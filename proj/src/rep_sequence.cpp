#include "latrep/rep_sequence.hpp"

#include <algorithm>

#include "latrep/errors.hpp"

namespace latrep {

rep_sequence build_rep_sequence(const finite_lattice& l, int seed_color,
                                rule_variant v, int wanted_stages,
                                int max_vertices) {
  rep_sequence r;
  r.lattice = l;
  r.seed_color = seed_color;
  r.variant = v;
  r.stages.push_back(pudlak_seed(l, seed_color));
  for (int j = 0; j < wanted_stages; ++j) {
    expand_stats st;
    try {
      r.stages.push_back(
          pudlak_expand(l, r.stages.back(), v, max_vertices, &st));
    } catch (const size_error&) {
      r.capped = true;
      break;
    }
    r.stats.push_back(st);
  }
  return r;
}

rep_sequence sequence_from_graph(const finite_lattice& l,
                                 const colored_graph& g, rule_variant v,
                                 int seed_color) {
  validate(g, l);
  for (int x = 1; x < g.vertex_count(); ++x)
    if (g.vertex_stage[x] < g.vertex_stage[x - 1])
      throw format_error("vertex stages not in creation order");
  rep_sequence r;
  r.lattice = l;
  r.seed_color = seed_color;
  r.variant = v;
  const int top = g.max_stage();
  for (int j = 0; j <= top; ++j) {
    colored_graph s;
    s.lattice_n = g.lattice_n;
    for (int x = 0; x < g.vertex_count(); ++x)
      if (g.vertex_stage[x] <= j) s.vertex_stage.push_back(g.vertex_stage[x]);
    for (const auto& e : g.edges)
      if (g.edge_stage(e) <= j) s.edges.push_back(e);
    validate(s, l);
    r.stages.push_back(std::move(s));
  }
  return r;
}

persistence_verdict check_persistence(const rep_sequence& r, int k, int j) {
  if (j < 0 || j + 1 >= r.stage_count())
    throw domain_error("persistence: stage out of range");
  if (k < 0 || k >= r.lattice.n)
    throw domain_error("persistence: color out of range");
  partition before = equiv_relation(r.stages[j], r.lattice, k);
  partition after = equiv_relation(r.stages[j + 1], r.lattice, k);
  for (int x = 0; x < before.size(); ++x)
    if (after.rep(x) != before.rep(x))
      return {false, j, x, before.rep(x), after.rep(x)};
  return {};
}

persistence_verdict check_persistence_all(const rep_sequence& r, int k) {
  for (int j = 0; j + 1 < r.stage_count(); ++j) {
    persistence_verdict v = check_persistence(r, k, j);
    if (!v.ok) return v;
  }
  return {};
}

bool rep_report::exact_ok() const {
  return std::all_of(per_stage.begin(), per_stage.end(),
                     [](const stage_checks& s) {
                       return s.zero_identity && s.monotone && s.meet_fidelity;
                     });
}

bool rep_report::separations_ok() const {
  return std::all_of(separations.begin(), separations.end(),
                     [](const separation_record& s) { return s.found; });
}

int rep_report::max_stabilization_depth() const {
  int d = -1;
  for (const auto& s : stabilizations)
    if (s.conclusive) d = std::max(d, s.depth);
  return d;
}

bool rep_report::has_inconclusive() const {
  return std::any_of(stabilizations.begin(), stabilizations.end(),
                     [](const stabilization_record& s) { return !s.conclusive; });
}

rep_report rep_verify(const rep_sequence& r, int depth) {
  if (depth < 0 || depth >= r.stage_count())
    throw domain_error("rep_verify: depth exceeds built stages");
  const finite_lattice& l = r.lattice;
  const int built = r.stage_count();

  // partitions[j][k], for every built stage (stabilization may look past
  // the requested depth).
  std::vector<std::vector<partition>> part(built);
  for (int j = 0; j < built; ++j)
    for (int k = 0; k < l.n; ++k)
      part[j].push_back(equiv_relation(r.stages[j], l, k));

  rep_report report;
  report.depth = depth;

  for (int j = 0; j <= depth; ++j) {
    stage_checks sc;
    sc.stage = j;
    sc.zero_identity =
        part[j][l.unit] == partition::identity(r.stages[j].vertex_count());
    for (int m = 0; m < l.n && sc.monotone; ++m)
      for (int n = 0; n < l.n; ++n)
        if (l.leq(m, n) && !part[j][m].refines(part[j][n])) {
          sc.monotone = false;
          sc.mono_m = m;
          sc.mono_n = n;
          break;
        }
    for (int m = 0; m < l.n && sc.meet_fidelity; ++m)
      for (int n = m; n < l.n; ++n)
        if (!(part[j][l.meet_op(m, n)] ==
              partition_meet(part[j][m], part[j][n]))) {
          sc.meet_fidelity = false;
          sc.meet_m = m;
          sc.meet_n = n;
          break;
        }
    report.per_stage.push_back(sc);
  }

  for (int m = 0; m < l.n; ++m)
    for (int n = 0; n < l.n; ++n) {
      if (m == n || l.leq(m, n)) continue;
      separation_record rec;
      rec.m = m;
      rec.n = n;
      for (int j = 0; j <= depth && !rec.found; ++j) {
        const int vcount = r.stages[j].vertex_count();
        for (int x = 0; x < vcount && !rec.found; ++x)
          for (int y = x + 1; y < vcount; ++y)
            if (part[j][m].same(x, y) && !part[j][n].same(x, y)) {
              rec.found = true;
              rec.stage = j;
              rec.x = x;
              rec.y = y;
              break;
            }
      }
      report.separations.push_back(rec);
    }

  for (int j = 0; j <= depth; ++j) {
    const int vcount = r.stages[j].vertex_count();
    for (int m = 0; m < l.n; ++m)
      for (int n = m + 1; n < l.n; ++n) {
        stabilization_record rec;
        rec.stage = j;
        rec.m = m;
        rec.n = n;
        const partition& target = part[j][l.op(m, n)];
        for (int jp = j; jp < built && !rec.conclusive; ++jp) {
          partition joined = partition_join(part[jp][m], part[jp][n]);
          bool covered = true;
          for (int x = 0; x < vcount; ++x)
            if (!joined.same(x, target.rep(x))) {
              covered = false;
              break;
            }
          if (covered) {
            rec.conclusive = true;
            rec.stabilized_at = jp;
            rec.depth = jp - j;
          }
        }
        report.stabilizations.push_back(rec);
      }
  }
  return report;
}

colored_graph recolor_embed(const usl_hom& h, const colored_graph& g) {
  hom_verdict hv = check_hom(h.source, h.target, h.map, hom_kind::usl);
  if (!hv.ok) throw domain_error("recolor: not an usl hom: " + hv.reason);
  validate(g, h.source);
  colored_graph out = g;
  out.lattice_n = h.target.n;
  for (auto& e : out.edges) {
    int mapped = h.map[e.color];
    if (mapped == h.target.unit)
      throw domain_error("recoloring error: color " + std::to_string(e.color) +
                         " maps to zero");
    e.color = mapped;
  }
  return out;
}

dual_sequence build_dual_sequence(const direct_system& d, int stages,
                                  int max_vertices,
                                  std::optional<int> deepest_seed,
                                  rule_variant v) {
  validate(d);
  const int levels = static_cast<int>(d.levels.size());
  dual_sequence out;
  out.dual_levels.reserve(levels);
  for (const auto& lvl : d.levels) out.dual_levels.push_back(dual(as_lattice(lvl)));

  out.adjoints.reserve(d.homs.size());
  for (const auto& h : d.homs) out.adjoints.push_back(galois_adjoint(h));

  std::vector<int> seeds(levels);
  seeds[levels - 1] =
      deepest_seed ? *deepest_seed : out.dual_levels[levels - 1].top();
  for (int i = levels - 2; i >= 0; --i)
    seeds[i] = out.adjoints[i].map[seeds[i + 1]];
  for (int i = 0; i < levels; ++i)
    if (seeds[i] == out.dual_levels[i].unit)
      throw domain_error("seed for level " + std::to_string(i) +
                         " maps to zero in the dual");

  out.reps.reserve(levels);
  for (int i = 0; i < levels; ++i)
    out.reps.push_back(
        build_rep_sequence(out.dual_levels[i], seeds[i], v, stages, max_vertices));

  out.recolored.resize(levels - 1);
  out.shift.resize(levels - 1);
  for (int i = 0; i + 1 < levels; ++i) {
    for (const auto& stage : out.reps[i + 1].stages) {
      colored_graph rec = recolor_embed(out.adjoints[i], stage);
      int fit = -1;
      for (int s = 0; s < out.reps[i].stage_count(); ++s)
        if (out.reps[i].stages[s].vertex_count() >= rec.vertex_count()) {
          fit = s;
          break;
        }
      out.recolored[i].push_back(std::move(rec));
      out.shift[i].push_back(fit);
    }
  }
  return out;
}

}  // namespace latrep
