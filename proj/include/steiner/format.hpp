#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "steiner/moments.hpp"

namespace steiner {

// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// re, re+imi or re-imi; pure reals print like doubles.
inline std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = format_double(z.real());
  s += std::signbit(z.imag()) ? '-' : '+';
  s += format_double(std::abs(z.imag()));
  s += 'i';
  return s;
}

}  // namespace steiner
