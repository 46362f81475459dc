#pragma once

#include <stdexcept>
#include <string>

namespace latrep {

// Input that does not match a schema: ragged tables, out-of-range entries,
// unparseable files.
class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured size cap was exceeded (carrier bound, vertex cap, result cap).
class size_error : public std::runtime_error {
 public:
  explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

// A semantic precondition failed: not an ideal, zero seed color, index out of
// range, incompatible presentation, and the like.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latrep
