#include "latrep/homogeneity.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "latrep/errors.hpp"

namespace latrep {

rel_structure rel_structure::from_congruences(const congruence_lattice& cl) {
  rel_structure s;
  s.n = cl.members.empty() ? 0 : cl.members.front().size();
  s.relations = cl.members;
  return s;
}

rel_structure rel_structure::from_stage(const rep_sequence& r, int stage) {
  if (stage < 0 || stage >= r.stage_count())
    throw domain_error("rel_structure: stage out of range");
  rel_structure s;
  s.n = r.stages[stage].vertex_count();
  for (int k = 0; k < r.lattice.n; ++k)
    s.relations.push_back(equiv_relation(r.stages[stage], r.lattice, k));
  return s;
}

void validate(const rel_structure& s) {
  if (s.n <= 0) throw format_error("relation structure carrier must be nonempty");
  for (const auto& p : s.relations)
    if (p.size() != s.n)
      throw format_error("relation carrier differs from structure carrier");
}

namespace {

// Relations that actually constrain anything; identity and the full
// relation are preserved by every map.
std::vector<const partition*> binding_relations(const rel_structure& s) {
  std::vector<const partition*> out;
  for (const auto& p : s.relations)
    if (p.block_count() != s.n && p.block_count() != 1) out.push_back(&p);
  return out;
}

void enumerate_maps(const rel_structure& s,
                    const std::vector<const partition*>& rels,
                    std::vector<int>& image, int next, long max_maps,
                    std::vector<std::vector<int>>& out) {
  if (next == s.n) {
    if (static_cast<long>(out.size()) >= max_maps)
      throw size_error("preserving map count exceeds cap " +
                       std::to_string(max_maps));
    out.push_back(image);
    return;
  }
  for (int v = 0; v < s.n; ++v) {
    bool ok = true;
    for (const partition* p : rels) {
      if (!ok) break;
      for (int prev = 0; prev < next; ++prev)
        if (p->same(prev, next) && !p->same(image[prev], v)) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    image[next] = v;
    enumerate_maps(s, rels, image, next + 1, max_maps, out);
  }
}

}  // namespace

std::vector<std::vector<int>> relation_preserving_maps(
    const rel_structure& s, const map_enum_limits& limits) {
  validate(s);
  if (s.n > limits.max_carrier)
    throw size_error("carrier " + std::to_string(s.n) +
                     " exceeds map enumeration bound " +
                     std::to_string(limits.max_carrier));
  std::vector<std::vector<int>> out;
  std::vector<int> image(s.n, 0);
  enumerate_maps(s, binding_relations(s), image, 0, limits.max_maps, out);
  return out;
}

bool premise_holds(const rel_structure& s, int a, int b, int c, int d) {
  validate(s);
  for (const auto& p : s.relations)
    if (p.same(a, b) && !p.same(c, d)) return false;
  return true;
}

std::optional<witness_chain> malcev_chain(
    const rel_structure& s, int a, int b, int c, int d,
    const std::vector<std::vector<int>>* maps, const map_enum_limits& limits) {
  if (a < 0 || a >= s.n || b < 0 || b >= s.n || c < 0 || c >= s.n || d < 0 ||
      d >= s.n)
    throw domain_error("malcev_chain: element out of range");
  if (!premise_holds(s, a, b, c, d))
    throw domain_error("malcev_chain: premise fails for (" +
                       std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + "," + std::to_string(d) + ")");

  std::vector<std::vector<int>> own;
  if (!maps) {
    own = relation_preserving_maps(s, limits);
    maps = &own;
  }

  // edge_map[u][v] = least index of a map sending {a,b} onto {u,v}.
  std::vector<std::vector<int>> edge_map(s.n, std::vector<int>(s.n, -1));
  for (size_t i = 0; i < maps->size(); ++i) {
    const auto& f = (*maps)[i];
    int u = f[a], v = f[b];
    if (edge_map[u][v] < 0) edge_map[u][v] = static_cast<int>(i);
    if (edge_map[v][u] < 0) edge_map[v][u] = static_cast<int>(i);
  }

  // Breadth-first from c; ascending neighbor order fixes the tie-break.
  std::vector<int> dist(s.n, -1), prev(s.n, -1), via(s.n, -1);
  std::queue<int> q;
  dist[c] = 0;
  q.push(c);
  if (c == d && edge_map[c][c] < 0) {
    // A one-step chain needs a map collapsing {a,b} onto {c}; the constant
    // map at c always qualifies, so this only happens if it was capped out.
    return std::nullopt;
  }
  while (!q.empty() && dist[d] < 0) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < s.n; ++v) {
      if (dist[v] >= 0 || edge_map[u][v] < 0) continue;
      dist[v] = dist[u] + 1;
      prev[v] = u;
      via[v] = edge_map[u][v];
      q.push(v);
    }
  }

  witness_chain w;
  if (c == d) {
    w.maps.push_back((*maps)[edge_map[c][c]]);
    return w;
  }
  if (dist[d] < 0) return std::nullopt;
  std::vector<int> path{d};
  std::vector<int> steps;
  for (int x = d; x != c; x = prev[x]) {
    steps.push_back(via[x]);
    path.push_back(prev[x]);
  }
  std::reverse(path.begin(), path.end());
  std::reverse(steps.begin(), steps.end());
  w.intermediates.assign(path.begin() + 1, path.end() - 1);
  for (int idx : steps) w.maps.push_back((*maps)[idx]);
  return w;
}

namespace {

bool preserves_all(const rel_structure& s, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != s.n) return false;
  for (int v : f)
    if (v < 0 || v >= s.n) return false;
  for (const auto& p : s.relations)
    for (int x = 0; x < s.n; ++x)
      for (int y = x + 1; y < s.n; ++y)
        if (p.same(x, y) && !p.same(f[x], f[y])) return false;
  return true;
}

bool pair_eq(int x1, int y1, int x2, int y2) {
  return (x1 == x2 && y1 == y2) || (x1 == y2 && y1 == x2);
}

}  // namespace

bool verify_chain(const rel_structure& s, int a, int b, int c, int d,
                  const witness_chain& w) {
  if (w.maps.size() != w.intermediates.size() + 1) return false;
  for (const auto& f : w.maps)
    if (!preserves_all(s, f)) return false;
  std::vector<int> nodes;
  nodes.push_back(c);
  nodes.insert(nodes.end(), w.intermediates.begin(), w.intermediates.end());
  nodes.push_back(d);
  for (size_t i = 0; i < w.maps.size(); ++i)
    if (!pair_eq(w.maps[i][a], w.maps[i][b], nodes[i], nodes[i + 1]))
      return false;
  return true;
}

homogeneity_report homogeneity_check(const rel_structure& s,
                                     const map_enum_limits& limits) {
  validate(s);
  auto maps = relation_preserving_maps(s, limits);
  homogeneity_report rep;
  for (int a = 0; a < s.n && rep.homogeneous; ++a)
    for (int b = 0; b < s.n && rep.homogeneous; ++b)
      for (int c = 0; c < s.n && rep.homogeneous; ++c)
        for (int d = 0; d < s.n; ++d) {
          ++rep.quadruples;
          if (!premise_holds(s, a, b, c, d)) continue;
          ++rep.premise_count;
          auto chain = malcev_chain(s, a, b, c, d, &maps, limits);
          if (!chain) {
            rep.homogeneous = false;
            rep.counterexample = {a, b, c, d};
            break;
          }
          rep.max_chain_length = std::max(rep.max_chain_length, chain->length());
          rep.witnesses.push_back({{a, b, c, d}, std::move(*chain)});
        }
  return rep;
}

}  // namespace latrep
