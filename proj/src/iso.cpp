#include "latrep/iso.hpp"

#include <algorithm>

namespace latrep {

namespace {

struct order_profile {
  int below = 0;   // size of the principal down-set
  int above = 0;   // size of the principal up-set
  int height = 0;  // longest chain below
  int depth = 0;   // longest chain above

  bool operator==(const order_profile&) const = default;
};

std::vector<order_profile> profiles(const finite_usl& l) {
  const int n = l.n;
  std::vector<order_profile> p(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (l.leq(b, a)) ++p[a].below;
      if (l.leq(a, b)) ++p[a].above;
    }
  // Longest chains via repeated relaxation; n rounds suffice.
  for (int round = 0; round < n; ++round)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        if (l.leq(b, a))
          p[a].height = std::max(p[a].height, p[b].height + 1);
        if (l.leq(a, b))
          p[a].depth = std::max(p[a].depth, p[b].depth + 1);
      }
  return p;
}

bool extend(const finite_usl& a, const finite_usl& b,
            const std::vector<order_profile>& pa,
            const std::vector<order_profile>& pb, std::vector<int>& map,
            std::vector<bool>& used, int next) {
  if (next == a.n) return true;
  for (int img = 0; img < b.n; ++img) {
    if (used[img] || !(pa[next] == pb[img])) continue;
    bool fits = true;
    for (int prev = 0; prev < next && fits; ++prev) {
      if (a.leq(prev, next) != b.leq(map[prev], img)) fits = false;
      if (a.leq(next, prev) != b.leq(img, map[prev])) fits = false;
    }
    if (!fits) continue;
    map[next] = img;
    used[img] = true;
    if (extend(a, b, pa, pb, map, used, next + 1)) return true;
    used[img] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> lattice_isomorphic(const finite_usl& a,
                                                   const finite_usl& b) {
  validate_shape(a);
  validate_shape(b);
  if (a.n != b.n) return std::nullopt;
  auto pa = profiles(a), pb = profiles(b);
  {
    auto sa = pa;
    auto sb = pb;
    auto key = [](const order_profile& p) {
      return std::array<int, 4>{p.below, p.above, p.height, p.depth};
    };
    auto lt = [&](const order_profile& x, const order_profile& y) {
      return key(x) < key(y);
    };
    std::sort(sa.begin(), sa.end(), lt);
    std::sort(sb.begin(), sb.end(), lt);
    if (!(sa == sb)) return std::nullopt;
  }
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  if (extend(a, b, pa, pb, map, used, 0)) return map;
  return std::nullopt;
}

clfa_verdict clfa_verify(const finite_usl& l, const finite_algebra& a,
                         const congruence_limits& limits) {
  clfa_verdict v;
  v.conlat = enumerate_congruences(a, limits);
  auto iso = lattice_isomorphic(v.conlat.lattice, l);
  if (iso) {
    v.ok = true;
    v.witness = *iso;
  }
  return v;
}

}  // namespace latrep
