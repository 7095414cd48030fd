/// @file chi.hpp
/// @brief Middle Hodge numbers of generic complete intersections in ordinary
///        projective space via Euler characteristics of twisted p-forms.
///
/// chi(P^N, O(m)) = binom(m+N, N) as a polynomial; the exterior powers of the
/// Euler sequence give chi(Omega^p_P(t)) by recursion; the Koszul resolution
/// restricts to X, and the conormal filtration (gradeds Lambda^i N^v tensor
/// Omega^{p-i}_X) peels off chi(Omega^p_X(t)).  Off-middle cohomology of a
/// complete intersection is one-dimensional diagonal, so the middle Hodge
/// numbers drop out of the chi^p with signs.  Everything is exact integer
/// arithmetic; this is the fast exact route for all-unit-weight families and
/// an oracle for the randomized rank path.

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wci/integers.hpp"

namespace wci {

class CompleteIntersectionChi {
 public:
  CompleteIntersectionChi(int ambient_index, std::vector<int> degrees)
      : N_(ambient_index), degrees_(std::move(degrees)) {
    if (N_ < 1) throw ValidationError("chi: ambient index must be >= 1");
    if (degrees_.empty() || static_cast<int>(degrees_.size()) > N_)
      throw ValidationError("chi: need 1..N degrees");
    // inclusion/exclusion terms of the Koszul resolution: (sign, twist)
    const size_t k = degrees_.size();
    for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
      long long sum = 0;
      int bits = 0;
      for (size_t j = 0; j < k; ++j)
        if ((mask >> j) & 1) {
          sum += degrees_[j];
          ++bits;
        }
      koszul_.emplace_back(bits % 2 == 0 ? 1 : -1, sum);
    }
  }

  int dimension() const { return N_ - static_cast<int>(degrees_.size()); }

  /// chi(X, Omega^p_X(t))
  BigInt chi_omega(int p, long long t) const {
    if (p < 0) return BigInt(0);
    if (p == 0) return chi_structure(t);
    auto key = std::make_pair(p, t);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BigInt value(0);
    for (const auto& [sign, twist] : koszul_) value += sign * chi_omega_ambient(p, t - twist);
    // subtract the Lambda^i N^v tensor Omega^{p-i}_X gradeds, i >= 1
    const size_t k = degrees_.size();
    for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
      long long sum = 0;
      int bits = 0;
      for (size_t j = 0; j < k; ++j)
        if ((mask >> j) & 1) {
          sum += degrees_[j];
          ++bits;
        }
      if (bits > p) continue;
      value -= chi_omega(p - bits, t - sum);
    }
    memo_.emplace(key, value);
    return value;
  }

  /// Middle Hodge number h^{p, n-p}(X) for 0 <= p <= n/2 (full value; the
  /// primitive one is this minus 1 at p = n/2).
  BigInt middle_hodge(int p) const {
    const int n = dimension();
    if (p < 0 || 2 * p > n)
      throw ValidationError("chi: middle_hodge expects 0 <= p <= n/2");
    const BigInt chi_p = chi_omega(p, 0);
    if (2 * p == n) {
      BigInt h = (n / 2) % 2 == 0 ? chi_p : -chi_p;
      if (h < 0) throw Error("chi: negative middle Hodge number");
      return h;
    }
    const BigInt diagonal = p % 2 == 0 ? BigInt(1) : BigInt(-1);
    BigInt h = chi_p - diagonal;
    if ((n - p) % 2 != 0) h = -h;
    if (h < 0) throw Error("chi: negative middle Hodge number");
    return h;
  }

 private:
  BigInt chi_line(long long m) const { return binomial_poly(m + N_, N_); }

  BigInt chi_structure(long long t) const {
    BigInt value(0);
    for (const auto& [sign, twist] : koszul_) value += sign * chi_line(t - twist);
    return value;
  }

  /// chi(P^N, Omega^p(t)) via Lambda^p of the Euler sequence.
  BigInt chi_omega_ambient(int p, long long t) const {
    if (p < 0) return BigInt(0);
    if (p == 0) return chi_line(t);
    if (p > N_) return BigInt(0);
    auto key = std::make_pair(-p, t);  // negative p keys the ambient memo
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BigInt value = binomial(N_ + 1, p) * chi_line(t - p) - chi_omega_ambient(p - 1, t);
    memo_.emplace(key, value);
    return value;
  }

  int N_;
  std::vector<int> degrees_;
  std::vector<std::pair<int, long long>> koszul_;
  mutable std::map<std::pair<int, long long>, BigInt> memo_;
};

}  // namespace wci
