#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ggp {

/// Arbitrary-precision signed integer. Every degree, order and class count
/// in the library is carried as an ExactInt.
using ExactInt = boost::multiprecision::cpp_int;

inline ExactInt ipow(const ExactInt& base, std::uint64_t exponent) {
  ExactInt result = 1;
  ExactInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

/// (-1)^e as an ExactInt.
inline ExactInt sign_power(std::uint64_t e) { return (e % 2 == 0) ? ExactInt(1) : ExactInt(-1); }

/// Quotient of an exact division; throws InternalError carrying `context`
/// when the remainder is non-zero.
ExactInt exact_divide(const ExactInt& numerator, const ExactInt& denominator, const char* context);

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

}  // namespace ggp
