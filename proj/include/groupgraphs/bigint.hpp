#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gg {

// Exact arbitrary-precision integer. Order-spectrum counts overflow 64 bits
// quickly (|S_21| already does), so every element count is a BigInt.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt big_from_decimal(const std::string& s) { return BigInt(s); }

inline BigInt big_factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace gg
