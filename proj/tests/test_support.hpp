#pragma once

#include <optional>

#include "steiner/moments.hpp"

namespace steiner::test {

// Runs f and reports the library error code it throws, if any.
template <typename F>
std::optional<errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline double rel_diff(double u, double v) {
  const double scale = std::max(std::abs(u), std::abs(v));
  return scale == 0 ? 0.0 : std::abs(u - v) / scale;
}

inline double rel3(const InertiaTriple& u, const InertiaTriple& v) {
  return std::max(
      {rel_diff(u.a, v.a), rel_diff(u.b, v.b), rel_diff(u.c, v.c)});
}

}  // namespace steiner::test
