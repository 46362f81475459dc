#pragma once

#include <map>
#include <vector>

#include "latrep/rep_sequence.hpp"

namespace latrep {

// A string constrained positionwise by the stages of a representation
// chain: position x holds a vertex of stage x.
using theta_string = std::vector<int>;

// Per-position vertex counts for strings of length <= upto.
std::vector<int> space_sizes(const rep_sequence& r, int upto);

void validate_string(const std::vector<int>& sizes, const theta_string& s);

long long count_strings(const rep_sequence& r, int length);

// All strings of exactly the given length, lexicographic.
std::vector<theta_string> enumerate_strings(const rep_sequence& r, int length);

// Monotone string map: extension-preserving and incomparability-preserving,
// defined on every string up to the bound. The identity tree is kept lazy
// so large spaces never materialize; derived trees hold explicit tables.
struct tree_map {
  std::vector<int> src_sizes;  // domain space, length = bound
  std::vector<int> dst_sizes;  // range space
  std::vector<int> shift;      // the shift it was derived with; empty for roots
  bool lazy_identity = false;
  std::map<theta_string, theta_string> table;

  int bound() const { return static_cast<int>(src_sizes.size()); }
  theta_string apply(const theta_string& s) const;
};

tree_map identity_tree(const rep_sequence& r, int bound);

// Exhaustive invariant checks over the stored domain (identity trees pass
// by construction).
bool extension_preserving(const tree_map& t);
bool incomparability_preserving(const tree_map& t);

// Values of the child tree are values of the parent.
bool nest_composable(const std::vector<const tree_map*>& nest);

// Derives the next tree of a nest: the root maps to parent(root_image), and
// each added level consumes shift[j+1]-shift[j] repetitions of the chosen
// vertex as padding inside the parent's domain, treating the cross-space
// vertex identification as inclusion. shift must be nondecreasing with
// |root_image| > shift[0] and strictly increasing below the bound.
tree_map subtree_shift(const tree_map& parent,
                       const std::vector<int>& next_sizes,
                       const theta_string& root_image,
                       const std::vector<int>& shift, int bound,
                       long max_domain = 200000);

// Minimal shift for which all padded strings stay inside the parent domain.
std::vector<int> default_shift(const tree_map& parent,
                               const std::vector<int>& next_sizes,
                               const theta_string& root_image, int bound);

struct branch_build {
  theta_string choices;
  theta_string g;                    // image of the choices in the base space
  std::vector<std::vector<int>> gk;  // gk[k][x] = f_k at stage x of g(x)
};

// Pushes a branch through the deepest tree of the nest and derives the
// per-color reduction of the resulting prefix from the stage tables.
branch_build build_g(const std::vector<const tree_map*>& nest,
                     const rep_sequence& base, const theta_string& choices);

struct reduction_verdict {
  bool ok = true;
  int witness_position = -1;
};

// The reduction law g_k(x) == f_k(g_m(x)) over every built position.
// Precondition: k below m in the logical order, which is the dual of the
// order of the lattice the chain is colored over (the coarser relation
// belongs to the logically smaller element).
reduction_verdict check_reduction(const branch_build& b,
                                  const rep_sequence& base, int k, int m);

}  // namespace latrep
