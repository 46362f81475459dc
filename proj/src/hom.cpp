#include "latrep/hom.hpp"

#include "latrep/errors.hpp"

namespace latrep {

hom_verdict check_hom(const finite_usl& source, const finite_usl& target,
                      const std::vector<int>& map, hom_kind kind) {
  validate_shape(source);
  validate_shape(target);
  if (static_cast<int>(map.size()) != source.n)
    return {false, "map is not total on the source carrier", -1, -1};
  for (int a = 0; a < source.n; ++a)
    if (map[a] < 0 || map[a] >= target.n)
      return {false, "map value out of target range", a, -1};
  for (int a = 0; a < source.n; ++a)
    for (int b = 0; b < source.n; ++b)
      if (map[source.op(a, b)] != target.op(map[a], map[b]))
        return {false, "join not preserved", a, b};
  if (map[source.unit] != target.unit)
    return {false, "unit not preserved", source.unit, -1};
  if (kind == hom_kind::busl) {
    if (!source.bound || !target.bound)
      return {false, "busl hom requires designated bounds on both sides", -1, -1};
    if (map[*source.bound] != *target.bound)
      return {false, "bound not preserved", *source.bound, -1};
  }
  return {};
}

hom_verdict check_hom(const usl_hom& h) {
  return check_hom(h.source, h.target, h.map, h.kind);
}

usl_hom identity_hom(const finite_usl& s, hom_kind kind) {
  usl_hom h{s, s, std::vector<int>(s.n), kind};
  for (int a = 0; a < s.n; ++a) h.map[a] = a;
  return h;
}

usl_hom compose(const usl_hom& g, const usl_hom& f) {
  if (!(f.target == g.source))
    throw domain_error("compose: inner target differs from outer source");
  usl_hom h;
  h.source = f.source;
  h.target = g.target;
  h.kind = (f.kind == hom_kind::busl && g.kind == hom_kind::busl)
               ? hom_kind::busl
               : hom_kind::usl;
  h.map.resize(f.source.n);
  for (int a = 0; a < f.source.n; ++a) h.map[a] = g.map[f.map[a]];
  return h;
}

usl_hom galois_adjoint(const usl_hom& f) {
  hom_verdict hv = check_hom(f.source, f.target, f.map, hom_kind::usl);
  if (!hv.ok) throw domain_error("not adjointable: " + hv.reason);

  const finite_lattice src = as_lattice(f.source);
  const finite_lattice tgt = as_lattice(f.target);

  usl_hom adj;
  adj.source = dual(tgt);
  adj.target = dual(src);
  adj.map.resize(tgt.n);
  for (int x = 0; x < tgt.n; ++x) {
    std::vector<int> below;
    for (int a = 0; a < src.n; ++a)
      if (tgt.leq(f.map[a], x)) below.push_back(a);
    adj.map[x] = src.join_all(below);
  }
  // The defining equivalence, both directions, for every pair.
  for (int a = 0; a < src.n; ++a)
    for (int x = 0; x < tgt.n; ++x)
      if (tgt.leq(f.map[a], x) != src.leq(a, adj.map[x]))
        throw domain_error("not adjointable: Galois condition fails at (" +
                           std::to_string(a) + "," + std::to_string(x) + ")");
  hom_verdict dv =
      check_hom(adj.source, adj.target, adj.map, hom_kind::usl);
  if (!dv.ok) throw domain_error("not adjointable: adjoint " + dv.reason);
  adj.kind = check_hom(adj.source, adj.target, adj.map, hom_kind::busl).ok
                 ? hom_kind::busl
                 : hom_kind::usl;
  return adj;
}

}  // namespace latrep
