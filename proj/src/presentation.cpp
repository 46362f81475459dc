#include "latrep/presentation.hpp"

#include <algorithm>
#include <string>

#include "latrep/errors.hpp"

namespace latrep {

void validate(const presented_usl& p) {
  if (p.m <= 0) throw format_error("presentation carrier must be nonempty");
  if (static_cast<int>(p.preorder.size()) != p.m)
    throw format_error("preorder table has wrong row count");
  for (const auto& row : p.preorder)
    if (static_cast<int>(row.size()) != p.m)
      throw format_error("preorder table is ragged");
  if (static_cast<int>(p.joinop.size()) != p.m)
    throw format_error("join table has wrong row count");
  for (const auto& row : p.joinop) {
    if (static_cast<int>(row.size()) != p.m)
      throw format_error("join table is ragged");
    for (int v : row)
      if (v < 0 || v >= p.m) throw format_error("join table entry out of range");
  }
  for (int a = 0; a < p.m; ++a)
    if (!p.preorder[a][a])
      throw domain_error("preorder not reflexive at " + std::to_string(a));
  for (int a = 0; a < p.m; ++a)
    for (int b = 0; b < p.m; ++b)
      for (int c = 0; c < p.m; ++c)
        if (p.preorder[a][b] && p.preorder[b][c] && !p.preorder[a][c])
          throw domain_error("preorder not transitive at (" +
                             std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")");
}

presentation_result quotient_presentation(const presented_usl& p) {
  validate(p);
  const int m = p.m;

  // Classes of mutual comparability, ids by least member.
  std::vector<int> rep(m);
  for (int a = 0; a < m; ++a) {
    rep[a] = a;
    for (int b = 0; b < a; ++b)
      if (p.preorder[a][b] && p.preorder[b][a]) {
        rep[a] = rep[b];
        break;
      }
  }
  std::vector<int> reps;
  for (int a = 0; a < m; ++a)
    if (rep[a] == a) reps.push_back(a);
  std::vector<int> class_of(m);
  for (int a = 0; a < m; ++a)
    class_of[a] = static_cast<int>(
        std::find(reps.begin(), reps.end(), rep[a]) - reps.begin());
  const int q = static_cast<int>(reps.size());

  // The induced join must not depend on representatives.
  for (int a = 0; a < m; ++a)
    for (int a2 = 0; a2 < m; ++a2) {
      if (class_of[a] != class_of[a2]) continue;
      for (int b = 0; b < m; ++b)
        for (int b2 = 0; b2 < m; ++b2) {
          if (class_of[b] != class_of[b2]) continue;
          if (class_of[p.joinop[a][b]] != class_of[p.joinop[a2][b2]])
            throw domain_error(
                "join incompatible with preorder: join(" + std::to_string(a) +
                "," + std::to_string(b) + ") and join(" + std::to_string(a2) +
                "," + std::to_string(b2) +
                ") land in different classes of equal arguments");
        }
    }

  finite_usl u;
  u.n = q;
  u.join.assign(q, std::vector<int>(q, 0));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      u.join[i][j] = class_of[p.joinop[reps[i]][reps[j]]];

  // Unit: the class below every class in the induced order.
  int unit = -1;
  for (int i = 0; i < q; ++i) {
    bool least = true;
    for (int j = 0; j < q; ++j)
      if (!p.preorder[reps[i]][reps[j]]) least = false;
    if (least) {
      unit = i;
      break;
    }
  }
  if (unit < 0)
    throw domain_error("presentation has no least class, quotient is not unital");
  u.unit = unit;

  axiom_report ar = check_busl_axioms(u);
  if (!ar.pass()) {
    const axiom_check* f = ar.first_failure();
    throw domain_error("join incompatible with preorder: quotient fails eq " +
                       std::to_string(f->equation) + " (" + f->name + ")");
  }
  // The order derived from the induced join must match the induced preorder.
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      if (u.leq(i, j) != static_cast<bool>(p.preorder[reps[i]][reps[j]]))
        throw domain_error(
            "join incompatible with preorder: derived order differs at classes (" +
            std::to_string(i) + "," + std::to_string(j) + ")");

  return {u, class_of};
}

}  // namespace latrep
