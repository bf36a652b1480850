#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fricke {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

// Floor division, used for the even/odd splits m = 2l, 2l+1 and n = 2k, 2k+1.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace fricke
