/// @file integers.hpp
/// @brief Exact integer primitives: big integers, binomials, gcd helpers.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wci {

using BigInt = mpz_class;

/// gmpxx has no long long overloads; long is 64-bit on every supported target.
inline BigInt big(long long v) { return BigInt(static_cast<long>(v)); }

/// Error hierarchy shared by the whole library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Malformed family strings, bad flag values.
struct ParseError : Error {
  using Error::Error;
};
/// Structurally invalid inputs (weights < 1, degree 1 equations, violated preconditions).
struct ValidationError : Error {
  using Error::Error;
};
/// Workload exceeds the configured matrix capacity or a checked integer range.
struct CapacityError : Error {
  using Error::Error;
};

inline long long gcd_ll(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Ceiling of a/b for b > 0, correct for negative a.
inline long long ceil_div(long long a, long long b) {
  if (b <= 0) throw ValidationError("ceil_div: denominator must be positive");
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

/// Binomial coefficient with the vanishing convention: zero whenever
/// top < 0, bottom < 0 or top < bottom.  This is the convention the
/// nested Poincare-series sums rely on (out-of-range summands drop out).
inline BigInt binomial(long long top, long long bottom) {
  if (bottom < 0 || top < 0 || top < bottom) return BigInt(0);
  if (bottom > top - bottom) bottom = top - bottom;
  BigInt result(1);
  for (long long i = 1; i <= bottom; ++i) {
    result *= static_cast<long>(top - bottom + i);
    result /= static_cast<long>(i);  // exact at each step
  }
  return result;
}

/// Polynomial binomial binom(top, k) = top(top-1)...(top-k+1)/k!, defined for
/// any integer top (negative included).  Used by Euler-characteristic
/// computations where binom(m+N, N) is the Hilbert polynomial of O(m).
inline BigInt binomial_poly(long long top, long long k) {
  if (k < 0) return BigInt(0);
  BigInt num(1);
  for (long long i = 0; i < k; ++i) num *= static_cast<long>(top - i);
  BigInt den(1);
  for (long long i = 2; i <= k; ++i) den *= static_cast<long>(i);
  return num / den;
}

inline long long checked_ll(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) {
    // long is 64-bit on every target we build for
    throw CapacityError(std::string(what) + ": value exceeds 64-bit range");
  }
  return static_cast<long long>(v.get_si());
}

}  // namespace wci
