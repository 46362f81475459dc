#include "latrep/partition.hpp"

#include <map>
#include <utility>

#include "latrep/errors.hpp"

namespace latrep {

union_find::union_find(int n) : parent_(n) {
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

int union_find::find(int x) {
  int root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) x = std::exchange(parent_[x], root);
  return root;
}

bool union_find::unite(int x, int y) {
  int rx = find(x), ry = find(y);
  if (rx == ry) return false;
  // Keep the least element on top so canonicalization is direct.
  if (ry < rx) std::swap(rx, ry);
  parent_[ry] = rx;
  return true;
}

partition union_find::to_partition() {
  const int n = static_cast<int>(parent_.size());
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) pairs.emplace_back(find(x), x);
  return partition::from_pairs(n, pairs);
}

partition partition::identity(int n) {
  partition p;
  p.rep_.resize(n);
  for (int i = 0; i < n; ++i) p.rep_[i] = i;
  return p;
}

partition partition::single_block(int n) {
  partition p;
  p.rep_.assign(n, 0);
  return p;
}

partition partition::from_pairs(int n,
                                const std::vector<std::pair<int, int>>& pairs) {
  union_find uf(n);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw domain_error("partition pair out of range");
    uf.unite(x, y);
  }
  partition p;
  p.rep_.resize(n);
  for (int x = 0; x < n; ++x) p.rep_[x] = uf.find(x);
  return p;
}

partition partition::from_blocks(int n,
                                 const std::vector<std::vector<int>>& blocks) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> seen(n, false);
  for (const auto& b : blocks) {
    if (b.empty()) throw domain_error("partition block empty");
    for (int x : b) {
      if (x < 0 || x >= n) throw domain_error("partition element out of range");
      if (seen[x]) throw domain_error("partition blocks overlap");
      seen[x] = true;
      pairs.emplace_back(b.front(), x);
    }
  }
  for (int x = 0; x < n; ++x)
    if (!seen[x]) throw domain_error("partition blocks do not cover carrier");
  return from_pairs(n, pairs);
}

int partition::block_count() const {
  int c = 0;
  for (int x = 0; x < size(); ++x)
    if (rep_[x] == x) ++c;
  return c;
}

std::vector<std::vector<int>> partition::blocks() const {
  std::vector<std::vector<int>> out;
  std::map<int, int> index;
  for (int x = 0; x < size(); ++x) {
    auto [it, fresh] = index.emplace(rep_[x], static_cast<int>(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(x);
  }
  return out;
}

bool partition::refines(const partition& other) const {
  if (size() != other.size())
    throw domain_error("partition carrier mismatch");
  for (int x = 0; x < size(); ++x)
    if (!other.same(x, rep_[x])) return false;
  return true;
}

std::string partition::block_string() const {
  const bool compact = size() <= 10;
  std::string s;
  for (const auto& b : blocks()) {
    if (!s.empty()) s += '|';
    for (size_t i = 0; i < b.size(); ++i) {
      if (i > 0 && !compact) s += ',';
      s += std::to_string(b[i]);
    }
  }
  return s;
}

partition partition_meet(const partition& p, const partition& q) {
  if (p.size() != q.size()) throw domain_error("partition carrier mismatch");
  const int n = p.size();
  std::map<std::pair<int, int>, int> least;
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    auto key = std::make_pair(p.rep(x), q.rep(x));
    auto [it, fresh] = least.emplace(key, x);
    if (!fresh) pairs.emplace_back(it->second, x);
  }
  return partition::from_pairs(n, pairs);
}

partition partition_join(const partition& p, const partition& q) {
  if (p.size() != q.size()) throw domain_error("partition carrier mismatch");
  const int n = p.size();
  union_find uf(n);
  for (int x = 0; x < n; ++x) {
    uf.unite(x, p.rep(x));
    uf.unite(x, q.rep(x));
  }
  return uf.to_partition();
}

}  // namespace latrep
