#pragma once

// Shorthands shared by the implementation files.

#include <string>

#include "entwine/structures.hpp"

namespace entwine::detail {

inline ShapedMap id(const FieldSpec& f, std::size_t n) { return identity_map(f, n); }

inline ShapedMap sw(const FieldSpec& f, std::size_t u, std::size_t v) { return swap_map(f, u, v); }

// a (x) b for two or more maps.
template <typename... M>
ShapedMap tens(const ShapedMap& a, const M&... rest) {
  return kron_all({a, rest...});
}

template <typename... M>
ShapedMap comp(const ShapedMap& a, const M&... rest) {
  return compose_all({a, rest...});
}

// Number of entries in which two maps of equal size differ.
inline std::size_t differing_entries(const ShapedMap& a, const ShapedMap& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.matrix.size(); ++i)
    if (!(a.matrix.at_flat(i) == b.matrix.at_flat(i))) ++n;
  return n;
}

// Appends a violation when lhs != rhs.
inline void expect_equal(Report& r, const ShapedMap& lhs, const ShapedMap& rhs, const std::string& label,
                         const std::string& where) {
  if (lhs.matrix.rows() != rhs.matrix.rows() || lhs.matrix.cols() != rhs.matrix.cols()) {
    r.violations.push_back({label, where, "sides have different sizes"});
    return;
  }
  if (const std::size_t n = differing_entries(lhs, rhs); n > 0)
    r.violations.push_back({label, where, "sides differ in " + std::to_string(n) + " entries"});
}

}  // namespace entwine::detail
