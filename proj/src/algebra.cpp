#include "latrep/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "latrep/errors.hpp"

namespace latrep {

static long long ipow(int base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

int finite_algebra::apply(int op_index, std::span<const int> args) const {
  const operation& f = ops[op_index];
  long long idx = 0;
  for (int i = 0; i < f.arity; ++i) idx = idx * n + args[i];
  return f.table[idx];
}

void validate_shape(const finite_algebra& a) {
  if (a.n <= 0) throw format_error("algebra carrier must be nonempty");
  for (const auto& f : a.ops) {
    if (f.arity < 0) throw format_error("negative arity");
    if (static_cast<long long>(f.table.size()) != ipow(a.n, f.arity))
      throw format_error("operation table has wrong size");
    for (int v : f.table)
      if (v < 0 || v >= a.n)
        throw format_error("operation table entry out of range");
  }
}

// Walks all tuples of length `arity` with position `pos` fixed later;
// the context is every coordinate except pos.
template <typename Fn>
static void for_each_context(int n, int arity, int pos, Fn&& fn) {
  std::vector<int> ctx(arity, 0);
  while (true) {
    fn(ctx);
    int i = arity - 1;
    for (; i >= 0; --i) {
      if (i == pos) continue;
      if (++ctx[i] < n) break;
      ctx[i] = 0;
    }
    if (i < 0) break;
  }
}

congruence_verdict is_congruence(const finite_algebra& a, const partition& p) {
  validate_shape(a);
  if (p.size() != a.n) throw domain_error("partition carrier mismatch");
  for (size_t op = 0; op < a.ops.size(); ++op) {
    const int r = a.ops[op].arity;
    if (r == 0) continue;
    for (int pos = 0; pos < r; ++pos) {
      congruence_verdict bad;
      bool found = false;
      for_each_context(a.n, r, pos, [&](std::vector<int>& ctx) {
        if (found) return;
        for (int x = 0; x < a.n && !found; ++x)
          for (int y = x + 1; y < a.n; ++y) {
            if (!p.same(x, y)) continue;
            ctx[pos] = x;
            int vx = a.apply(static_cast<int>(op), ctx);
            ctx[pos] = y;
            int vy = a.apply(static_cast<int>(op), ctx);
            if (!p.same(vx, vy)) {
              bad.ok = false;
              bad.op_index = static_cast<int>(op);
              ctx[pos] = x;
              bad.tuple_x = ctx;
              ctx[pos] = y;
              bad.tuple_y = ctx;
              found = true;
              break;
            }
          }
      });
      if (found) return bad;
    }
  }
  return {};
}

partition principal_congruence(const finite_algebra& a, int x, int y) {
  validate_shape(a);
  if (x < 0 || x >= a.n || y < 0 || y >= a.n)
    throw domain_error("principal congruence pair out of range");
  union_find uf(a.n);
  uf.unite(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t op = 0; op < a.ops.size(); ++op) {
      const int r = a.ops[op].arity;
      if (r == 0) continue;
      for (int pos = 0; pos < r; ++pos)
        for_each_context(a.n, r, pos, [&](std::vector<int>& ctx) {
          for (int u = 0; u < a.n; ++u)
            for (int v = u + 1; v < a.n; ++v) {
              if (uf.find(u) != uf.find(v)) continue;
              ctx[pos] = u;
              int fu = a.apply(static_cast<int>(op), ctx);
              ctx[pos] = v;
              int fv = a.apply(static_cast<int>(op), ctx);
              if (uf.unite(fu, fv)) changed = true;
            }
        });
    }
  }
  return uf.to_partition();
}

int congruence_lattice::index_of(const partition& p) const {
  for (size_t i = 0; i < members.size(); ++i)
    if (members[i] == p) return static_cast<int>(i);
  return -1;
}

congruence_lattice enumerate_congruences(const finite_algebra& a,
                                         const congruence_limits& limits) {
  validate_shape(a);
  if (a.n > limits.max_carrier)
    throw size_error("carrier " + std::to_string(a.n) +
                     " exceeds congruence bound " +
                     std::to_string(limits.max_carrier));

  std::set<partition> found;
  found.insert(partition::identity(a.n));
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y) found.insert(principal_congruence(a, x, y));

  // Every congruence is a join of principal ones, so pairwise join closure
  // reaches all of them.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<partition> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        partition join = partition_join(snapshot[i], snapshot[j]);
        if (found.insert(join).second) {
          grew = true;
          if (static_cast<int>(found.size()) > limits.max_congruences)
            throw size_error("congruence count exceeds cap " +
                             std::to_string(limits.max_congruences));
        }
      }
  }

  congruence_lattice cl;
  cl.members.assign(found.begin(), found.end());
  std::sort(cl.members.begin(), cl.members.end(),
            [](const partition& p, const partition& q) {
              if (p.block_count() != q.block_count())
                return p.block_count() > q.block_count();
              return p < q;
            });

  const int m = static_cast<int>(cl.members.size());
  std::map<partition, int> index;
  for (int i = 0; i < m; ++i) index.emplace(cl.members[i], i);
  auto lookup = [&index](const partition& p) {
    auto it = index.find(p);
    if (it == index.end())
      throw domain_error("congruence set not closed under join/meet");
    return it->second;
  };
  cl.lattice.n = m;
  cl.lattice.join.assign(m, std::vector<int>(m, -1));
  cl.lattice.meet.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      cl.lattice.join[i][j] = lookup(partition_join(cl.members[i], cl.members[j]));
      cl.lattice.meet[i][j] = lookup(partition_meet(cl.members[i], cl.members[j]));
    }
  cl.lattice.unit = 0;
  cl.lattice.bound = m - 1;
  return cl;
}

}  // namespace latrep
