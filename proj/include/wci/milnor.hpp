/// @file milnor.hpp
/// @brief Exact Hilbert series of the Jacobian ring of a quasi-smooth
///        weighted hypersurface.
///
/// For a general hypersurface of degree d in P(a_0..a_N) whose general member
/// is quasi-smooth (and which is not a linear cone), the partial derivatives
/// form a regular sequence of degrees d - a_i, so the Milnor algebra
/// C[x]/(df/dx_0..df/dx_N) has Hilbert series
///     prod_i (1 - z^{d-a_i}) / (1 - z^{a_i}).
/// Its degree-e component equals dim R_{q,-i_X} for e = q*d - i_X, which is
/// how the middle Hodge numbers of such hypersurfaces are evaluated without
/// any rank computation.

#pragma once

#include <vector>

#include "wci/integers.hpp"

namespace wci {

/// coefficients[t] = [z^t] prod_i (1 - z^{d-a_i}) / (1 - z^{a_i}) for t <= e.
/// Divisions first (pure monomial counts), then numerator factors; every
/// intermediate value is a partial quotient-ring dimension, hence in
/// [0, count(t)], which keeps the integer type T within range whenever the
/// plain monomial counts fit.
template <class T>
std::vector<T> milnor_series(const std::vector<int>& weights, int d, long long e) {
  if (e < 0) return {};
  std::vector<T> c(static_cast<size_t>(e) + 1, T(0));
  c[0] = T(1);
  for (int a : weights) {
    if (a < 1) throw ValidationError("milnor_series: weights must be positive");
    for (long long t = a; t <= e; ++t) c[static_cast<size_t>(t)] += c[static_cast<size_t>(t - a)];
  }
  for (int a : weights) {
    const long long g = d - a;
    if (g <= 0) throw ValidationError("milnor_series: requires all weights below the degree");
    for (long long t = e; t >= g; --t) c[static_cast<size_t>(t)] -= c[static_cast<size_t>(t - g)];
  }
  return c;
}

inline BigInt milnor_dimension(const std::vector<int>& weights, int d, long long e) {
  if (e < 0) return BigInt(0);
  auto series = milnor_series<BigInt>(weights, d, e);
  return series[static_cast<size_t>(e)];
}

}  // namespace wci
