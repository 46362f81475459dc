#include "latrep/tree.hpp"

#include <algorithm>
#include <string>

#include "latrep/errors.hpp"

namespace latrep {

std::vector<int> space_sizes(const rep_sequence& r, int upto) {
  if (upto < 0 || upto > r.stage_count())
    throw domain_error("length exceeds built stages");
  std::vector<int> sizes(upto);
  for (int x = 0; x < upto; ++x) sizes[x] = r.stages[x].vertex_count();
  return sizes;
}

void validate_string(const std::vector<int>& sizes, const theta_string& s) {
  if (s.size() > sizes.size())
    throw domain_error("string longer than the built space");
  for (size_t x = 0; x < s.size(); ++x)
    if (s[x] < 0 || s[x] >= sizes[x])
      throw domain_error("string position " + std::to_string(x) +
                         " is not a stage-" + std::to_string(x) + " vertex");
}

long long count_strings(const rep_sequence& r, int length) {
  auto sizes = space_sizes(r, length);
  long long c = 1;
  for (int s : sizes) c *= s;
  return c;
}

std::vector<theta_string> enumerate_strings(const rep_sequence& r, int length) {
  auto sizes = space_sizes(r, length);
  std::vector<theta_string> out;
  theta_string cur(length, 0);
  while (true) {
    out.push_back(cur);
    int i = length - 1;
    for (; i >= 0; --i) {
      if (++cur[i] < sizes[i]) break;
      cur[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

theta_string tree_map::apply(const theta_string& s) const {
  validate_string(src_sizes, s);
  if (lazy_identity) return s;
  auto it = table.find(s);
  if (it == table.end()) throw domain_error("string not in tree domain");
  return it->second;
}

tree_map identity_tree(const rep_sequence& r, int bound) {
  tree_map t;
  t.src_sizes = space_sizes(r, bound);
  t.dst_sizes = t.src_sizes;
  t.lazy_identity = true;
  return t;
}

namespace {

bool is_prefix(const theta_string& a, const theta_string& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

bool extension_preserving(const tree_map& t) {
  if (t.lazy_identity) return true;
  for (const auto& [s, v] : t.table) {
    if (s.empty()) continue;
    theta_string parent(s.begin(), s.end() - 1);
    if (!is_prefix(t.table.at(parent), v)) return false;
  }
  return true;
}

bool incomparability_preserving(const tree_map& t) {
  if (t.lazy_identity) return true;
  for (auto i = t.table.begin(); i != t.table.end(); ++i)
    for (auto j = std::next(i); j != t.table.end(); ++j) {
      bool comp = is_prefix(i->first, j->first) || is_prefix(j->first, i->first);
      bool img_comp =
          is_prefix(i->second, j->second) || is_prefix(j->second, i->second);
      if (!comp && img_comp) return false;
    }
  return true;
}

bool nest_composable(const std::vector<const tree_map*>& nest) {
  for (size_t i = 0; i + 1 < nest.size(); ++i) {
    const tree_map& parent = *nest[i];
    const tree_map& child = *nest[i + 1];
    if (parent.lazy_identity) continue;  // full range, anything composes
    for (const auto& [s, v] : child.table) {
      bool found = false;
      for (const auto& [ps, pv] : parent.table)
        if (pv == v) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

tree_map subtree_shift(const tree_map& parent,
                       const std::vector<int>& next_sizes,
                       const theta_string& root_image,
                       const std::vector<int>& shift, int bound,
                       long max_domain) {
  validate_string(parent.src_sizes, root_image);
  if (bound < 0 || bound > static_cast<int>(next_sizes.size()))
    throw domain_error("subtree bound exceeds the next space");
  if (static_cast<int>(shift.size()) < bound + 1)
    throw domain_error("shift function shorter than the bound");
  if (static_cast<int>(root_image.size()) <= shift[0])
    throw domain_error("root too short: need |root| > shift[0]");
  for (int j = 0; j < bound; ++j) {
    if (shift[j + 1] < shift[j])
      throw domain_error("shift function must be nondecreasing");
    if (shift[j + 1] == shift[j])
      throw domain_error("shift must strictly increase below the bound");
  }

  tree_map t;
  t.src_sizes.assign(next_sizes.begin(), next_sizes.begin() + bound);
  t.dst_sizes = parent.dst_sizes;
  t.shift.assign(shift.begin(), shift.begin() + bound + 1);

  // w(s) = root_image padded with shift[j+1]-shift[j] copies of each chosen
  // vertex; the tree value is the parent's value at w(s).
  std::map<theta_string, theta_string> words;
  words[{}] = root_image;
  t.table[{}] = parent.apply(root_image);
  std::vector<theta_string> level{{}};
  for (int j = 0; j < bound; ++j) {
    const int reps = shift[j + 1] - shift[j];
    std::vector<theta_string> next_level;
    for (const auto& s : level)
      for (int x = 0; x < next_sizes[j]; ++x) {
        if (static_cast<long>(t.table.size()) >= max_domain)
          throw size_error("tree domain exceeds cap " +
                           std::to_string(max_domain));
        theta_string ext = s;
        ext.push_back(x);
        theta_string w = words[s];
        for (int rep = 0; rep < reps; ++rep) {
          if (static_cast<int>(w.size()) >= parent.bound())
            throw domain_error("padding leaves domain: parent bound reached");
          if (x >= parent.src_sizes[w.size()])
            throw domain_error("padding leaves domain: vertex " +
                               std::to_string(x) +
                               " missing at parent position " +
                               std::to_string(w.size()));
          w.push_back(x);
        }
        t.table[ext] = parent.apply(w);
        words[ext] = std::move(w);
        next_level.push_back(std::move(ext));
      }
    level = std::move(next_level);
  }
  return t;
}

std::vector<int> default_shift(const tree_map& parent,
                               const std::vector<int>& next_sizes,
                               const theta_string& root_image, int bound) {
  if (root_image.empty())
    throw domain_error("root too short: need |root| > shift[0]");
  std::vector<int> shift{static_cast<int>(root_image.size()) - 1};
  int len = static_cast<int>(root_image.size());
  for (int j = 0; j < bound; ++j) {
    if (j >= static_cast<int>(next_sizes.size()))
      throw domain_error("subtree bound exceeds the next space");
    int reps = 1;
    auto fits = [&](int r) {
      if (len + r > parent.bound()) return false;
      for (int p = len; p < len + r; ++p)
        if (next_sizes[j] > parent.src_sizes[p]) return false;
      return true;
    };
    while (!fits(reps)) {
      if (len + reps > parent.bound())
        throw domain_error("padding leaves domain: no fitting shift");
      ++reps;
    }
    shift.push_back(shift.back() + reps);
    len += reps;
  }
  return shift;
}

branch_build build_g(const std::vector<const tree_map*>& nest,
                     const rep_sequence& base, const theta_string& choices) {
  if (nest.empty()) throw domain_error("empty tree nest");
  if (!nest_composable(nest)) throw domain_error("nest not composable");
  const tree_map& deepest = *nest.back();
  for (size_t x = 0; x < choices.size(); ++x)
    if (x >= deepest.src_sizes.size() || choices[x] < 0 ||
        choices[x] >= deepest.src_sizes[x])
      throw domain_error("invalid choice index at level " + std::to_string(x));

  branch_build b;
  b.choices = choices;
  b.g = deepest.apply(choices);
  validate_string(space_sizes(base, static_cast<int>(b.g.size())), b.g);

  b.gk.assign(base.lattice.n, std::vector<int>(b.g.size(), 0));
  for (size_t x = 0; x < b.g.size(); ++x) {
    rep_functions f = extract_functions(base.stages[x], base.lattice);
    for (int k = 0; k < base.lattice.n; ++k) b.gk[k][x] = f.f[k][b.g[x]];
  }
  return b;
}

reduction_verdict check_reduction(const branch_build& b,
                                  const rep_sequence& base, int k, int m) {
  if (k < 0 || k >= base.lattice.n || m < 0 || m >= base.lattice.n)
    throw domain_error("reduction: color out of range");
  // Logical order is the dual of the chain's color order.
  if (!base.lattice.leq(m, k))
    throw domain_error("reduction precondition: k not below m in the logical order");
  for (size_t x = 0; x < b.g.size(); ++x) {
    rep_functions f = extract_functions(base.stages[x], base.lattice);
    if (b.gk[k][x] != f.f[k][b.gk[m][x]])
      return {false, static_cast<int>(x)};
  }
  return {};
}

}  // namespace latrep
