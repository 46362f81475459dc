#include "latrep/direct_system.hpp"

#include <string>

#include "latrep/errors.hpp"

namespace latrep {

void validate(const direct_system& d) {
  if (d.levels.empty()) throw domain_error("direct system has no levels");
  if (d.homs.size() + 1 != d.levels.size())
    throw domain_error("direct system needs one hom per adjacent level pair");
  for (size_t i = 0; i < d.homs.size(); ++i) {
    if (!(d.homs[i].source == d.levels[i]) ||
        !(d.homs[i].target == d.levels[i + 1]))
      throw domain_error("hom " + std::to_string(i) +
                         " endpoints do not match the levels");
    hom_verdict v = check_hom(d.homs[i]);
    if (!v.ok)
      throw domain_error("hom " + std::to_string(i) + " invalid: " + v.reason);
  }
}

int push_forward(const direct_system& d, int i, int a, int j) {
  if (i < 0 || j < i || j >= static_cast<int>(d.levels.size()))
    throw domain_error("push_forward: level index out of range");
  if (a < 0 || a >= d.levels[i].n)
    throw domain_error("push_forward: element out of range");
  int x = a;
  for (int k = i; k < j; ++k) x = d.homs[k].map[x];
  return x;
}

limit_verdict limit_equal(const direct_system& d, int i, int a, int j, int b,
                          int depth) {
  const int levels = static_cast<int>(d.levels.size());
  if (i < 0 || i >= levels || j < 0 || j >= levels)
    throw domain_error("limit_equal: level index out of range");
  if (depth < 0 || depth >= levels)
    throw domain_error("limit_equal: depth out of range");
  if (a < 0 || a >= d.levels[i].n || b < 0 || b >= d.levels[j].n)
    throw domain_error("limit_equal: element out of range");
  int start = std::max(i, j);
  if (depth < start) throw domain_error("limit_equal: depth below both levels");
  for (int k = start; k <= depth; ++k)
    if (push_forward(d, i, a, k) == push_forward(d, j, b, k))
      return {true, k};
  return {false, depth};
}

}  // namespace latrep
