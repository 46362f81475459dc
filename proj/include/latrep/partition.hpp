#pragma once

#include <compare>
#include <string>
#include <vector>

namespace latrep {

// Partition of 0..n-1 in canonical form: each element stores the least
// member of its block. Canonical form makes equality and lexicographic
// comparison structural.
class partition {
 public:
  partition() = default;
  static partition identity(int n);
  static partition single_block(int n);
  // Least partition whose pair set contains the given pairs.
  static partition from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int x) const { return rep_[x]; }
  bool same(int x, int y) const { return rep_[x] == rep_[y]; }
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;

  // This partition's pair set is contained in other's.
  bool refines(const partition& other) const;

  // Blocks separated by '|', members in increasing order; members are
  // concatenated digits when the carrier fits in one digit each, else
  // comma-separated (e.g. "01|23", "0,11|1|...").
  std::string block_string() const;

  bool operator==(const partition&) const = default;
  auto operator<=>(const partition&) const = default;

 private:
  std::vector<int> rep_;
};

// Pair-set intersection.
partition partition_meet(const partition& p, const partition& q);
// Transitive closure of the pair-set union.
partition partition_join(const partition& p, const partition& q);

// Plain union-find over 0..n-1, used wherever a closure is computed.
class union_find {
 public:
  explicit union_find(int n);
  int find(int x);
  bool unite(int x, int y);  // returns true when two classes merged
  partition to_partition();

 private:
  std::vector<int> parent_;
};

}  // namespace latrep
