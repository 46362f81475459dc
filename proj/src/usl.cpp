#include "latrep/usl.hpp"

#include <algorithm>

#include "latrep/errors.hpp"

namespace latrep {

int finite_usl::top() const {
  int t = unit;
  for (int a = 0; a < n; ++a) t = join[t][a];
  return t;
}

int finite_usl::join_all(const std::vector<int>& elems) const {
  int t = unit;
  for (int a : elems) t = join[t][a];
  return t;
}

static void validate_table(const op_table& t, int n, const char* what) {
  if (static_cast<int>(t.size()) != n)
    throw format_error(std::string(what) + " table has wrong row count");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw format_error(std::string(what) + " table is ragged");
    for (int v : row)
      if (v < 0 || v >= n)
        throw format_error(std::string(what) + " table entry out of range");
  }
}

void validate_shape(const finite_usl& s) {
  if (s.n <= 0) throw format_error("carrier must be nonempty");
  validate_table(s.join, s.n, "join");
  if (s.unit < 0 || s.unit >= s.n) throw format_error("unit out of range");
  if (s.bound && (*s.bound < 0 || *s.bound >= s.n))
    throw format_error("bound out of range");
}

void validate_shape(const finite_lattice& s) {
  validate_shape(static_cast<const finite_usl&>(s));
  validate_table(s.meet, s.n, "meet");
}

bool axiom_report::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const axiom_check& c) { return c.pass; });
}

const axiom_check* axiom_report::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

axiom_report check_busl_axioms(const finite_usl& s) {
  validate_shape(s);
  const int n = s.n;
  axiom_report r;
  r.checks = {
      {1, "associativity", true, true, {-1, -1, -1}},
      {2, "commutativity", true, true, {-1, -1, -1}},
      {3, "idempotence", true, true, {-1, -1, -1}},
      {4, "unit", true, true, {-1, -1, -1}},
      {5, "bound", s.bound.has_value(), true, {-1, -1, -1}},
  };
  axiom_check& assoc = r.checks[0];
  axiom_check& comm = r.checks[1];
  axiom_check& idem = r.checks[2];
  axiom_check& unit = r.checks[3];
  axiom_check& bound = r.checks[4];

  for (int a = 0; a < n && assoc.pass; ++a)
    for (int b = 0; b < n && assoc.pass; ++b)
      for (int c = 0; c < n; ++c)
        if (s.op(a, s.op(b, c)) != s.op(s.op(a, b), c)) {
          assoc.pass = false;
          assoc.witness = {a, b, c};
          break;
        }
  for (int a = 0; a < n && comm.pass; ++a)
    for (int b = 0; b < n; ++b)
      if (s.op(a, b) != s.op(b, a)) {
        comm.pass = false;
        comm.witness = {a, b, -1};
        break;
      }
  for (int a = 0; a < n; ++a)
    if (s.op(a, a) != a) {
      idem.pass = false;
      idem.witness = {a, -1, -1};
      break;
    }
  for (int a = 0; a < n; ++a)
    if (s.op(a, s.unit) != a) {
      unit.pass = false;
      unit.witness = {a, -1, -1};
      break;
    }
  if (s.bound)
    for (int a = 0; a < n; ++a)
      if (s.op(a, *s.bound) != *s.bound) {
        bound.pass = false;
        bound.witness = {a, -1, -1};
        break;
      }
  return r;
}

lattice_family parse_family(const std::string& name) {
  if (name == "chain") return lattice_family::chain;
  if (name == "boolean") return lattice_family::boolean;
  if (name == "mn") return lattice_family::mn;
  if (name == "n5") return lattice_family::n5;
  throw format_error("unknown lattice family: " + name);
}

std::string family_name(lattice_family f) {
  switch (f) {
    case lattice_family::chain:
      return "chain";
    case lattice_family::boolean:
      return "boolean";
    case lattice_family::mn:
      return "mn";
    case lattice_family::n5:
      return "n5";
  }
  return "?";
}

// Builds the lattice from an explicit order relation: join = least upper
// bound, meet = greatest lower bound. The order must be a lattice order.
static finite_lattice from_order(int n, const std::vector<std::vector<bool>>& le) {
  finite_lattice l;
  l.n = n;
  l.join.assign(n, std::vector<int>(n, -1));
  l.meet.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (!le[a][c] || !le[b][c]) continue;
        bool least = true;
        for (int d = 0; d < n; ++d)
          if (le[a][d] && le[b][d] && !le[c][d]) least = false;
        if (least) {
          l.join[a][b] = c;
          break;
        }
      }
      for (int c = n - 1; c >= 0; --c) {
        if (!le[c][a] || !le[c][b]) continue;
        bool greatest = true;
        for (int d = 0; d < n; ++d)
          if (le[d][a] && le[d][b] && !le[d][c]) greatest = false;
        if (greatest) {
          l.meet[a][b] = c;
          break;
        }
      }
      if (l.join[a][b] < 0 || l.meet[a][b] < 0)
        throw domain_error("order is not a lattice order");
    }
  for (int a = 0; a < n; ++a) {
    if (std::all_of(le[a].begin(), le[a].end(), [](bool x) { return x; }))
      l.unit = a;
    bool above_all = true;
    for (int b = 0; b < n; ++b)
      if (!le[b][a]) above_all = false;
    if (above_all) l.bound = a;
  }
  return l;
}

finite_lattice make_standard(lattice_family family, int param) {
  if (param < 1) throw domain_error("invalid size: param must be >= 1");
  int n = 0;
  std::vector<std::vector<bool>> le;
  switch (family) {
    case lattice_family::chain: {
      n = param;
      le.assign(n, std::vector<bool>(n, false));
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) le[a][b] = true;
      break;
    }
    case lattice_family::boolean: {
      if (param > 16) throw size_error("boolean lattice too large");
      n = 1 << param;
      le.assign(n, std::vector<bool>(n, false));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) le[a][b] = (a & b) == a;
      break;
    }
    case lattice_family::mn: {
      // bottom 0, atoms 1..param, top param+1
      n = param + 2;
      le.assign(n, std::vector<bool>(n, false));
      for (int a = 0; a < n; ++a) {
        le[a][a] = true;
        le[0][a] = true;
        le[a][n - 1] = true;
      }
      break;
    }
    case lattice_family::n5: {
      // 0 < 1 < 2 < 4 and 0 < 3 < 4, with 3 incomparable to 1 and 2
      n = 5;
      le.assign(n, std::vector<bool>(n, false));
      for (int a = 0; a < n; ++a) {
        le[a][a] = true;
        le[0][a] = true;
        le[a][4] = true;
      }
      le[1][2] = true;
      break;
    }
  }
  return from_order(n, le);
}

finite_lattice as_lattice(const finite_usl& s) {
  validate_shape(s);
  finite_lattice l;
  static_cast<finite_usl&>(l) = s;
  const int n = s.n;
  l.meet.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int g = -1;
      for (int c = 0; c < n; ++c) {
        if (!s.leq(c, a) || !s.leq(c, b)) continue;
        bool greatest = true;
        for (int d = 0; d < n; ++d)
          if (s.leq(d, a) && s.leq(d, b) && !s.leq(d, c)) greatest = false;
        if (greatest) {
          g = c;
          break;
        }
      }
      if (g < 0)
        throw domain_error("not dualizable as usl: pair (" +
                           std::to_string(a) + "," + std::to_string(b) +
                           ") has no greatest lower bound");
      l.meet[a][b] = g;
    }
  if (!l.bound) l.bound = l.top();
  return l;
}

finite_lattice dual(const finite_lattice& l) {
  validate_shape(l);
  finite_lattice d;
  d.n = l.n;
  d.join = l.meet;
  d.meet = l.join;
  d.unit = l.bound ? *l.bound : l.top();
  d.bound = l.unit;
  return d;
}

}  // namespace latrep
