/// @file counting.hpp
/// @brief Weighted monomial counting, numerical-semigroup membership and
///        truncated Poincare-series coefficients.

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "wci/integers.hpp"

namespace wci {

/// counts[e] = number of monomials of weighted degree e, for 0 <= e <= max_degree.
/// Plain bounded-knapsack DP; exact for any integer type T that does not overflow.
template <class T>
std::vector<T> count_table(const std::vector<int>& weights, long long max_degree) {
  if (max_degree < 0) return {};
  std::vector<T> counts(static_cast<size_t>(max_degree) + 1, T(0));
  counts[0] = T(1);
  for (int w : weights) {
    if (w < 1) throw ValidationError("count_table: weights must be positive");
    for (long long e = w; e <= max_degree; ++e)
      counts[static_cast<size_t>(e)] += counts[static_cast<size_t>(e - w)];
  }
  return counts;
}

/// Monomial counts per degree with the invariants counts[0] = 1 and
/// counts[e] = #{exponent vectors m with sum m_i * weights[i] = e}.
struct WeightedDegreeTable {
  std::vector<int> weights;
  long long max_degree = 0;
  std::vector<BigInt> counts;

  static WeightedDegreeTable build(std::vector<int> weights, long long max_degree) {
    WeightedDegreeTable t;
    t.weights = std::move(weights);
    t.max_degree = max_degree;
    t.counts = count_table<BigInt>(t.weights, max_degree);
    return t;
  }

  const BigInt& at(long long degree) const {
    static const BigInt zero(0);
    if (degree < 0 || degree > max_degree) return zero;
    return counts[static_cast<size_t>(degree)];
  }
};

inline BigInt count_monomials(const std::vector<int>& weights, long long degree) {
  if (degree < 0) return BigInt(0);
  auto tbl = count_table<BigInt>(weights, degree);
  return tbl[static_cast<size_t>(degree)];
}

/// Bitset over degrees 0..max_degree: bit e set iff e lies in the numerical
/// semigroup generated by the weights added so far.
class ReachSet {
 public:
  explicit ReachSet(long long max_degree)
      : max_degree_(std::max<long long>(max_degree, 0)),
        bits_((static_cast<size_t>(max_degree_) + 64) / 64, 0) {
    bits_[0] = 1;  // degree 0: the empty monomial
  }

  long long max_degree() const { return max_degree_; }

  bool test(long long e) const {
    if (e < 0 || e > max_degree_) return false;
    return (bits_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  /// Close the set under adding the generator g (g >= 1), i.e. OR in all
  /// shifts by multiples of g.  Doubling trick: shifts by g, 2g, 4g, ...
  void add_generator(long long g) {
    if (g < 1) throw ValidationError("ReachSet: generators must be positive");
    for (long long s = g; s <= max_degree_; s *= 2) or_shifted(s);
  }

 private:
  void or_shifted(long long s) {
    const size_t nw = bits_.size();
    const size_t word = static_cast<size_t>(s) >> 6;
    const unsigned bit = static_cast<unsigned>(s & 63);
    if (bit == 0) {
      for (size_t i = nw; i-- > word;) bits_[i] |= bits_[i - word];
    } else {
      for (size_t i = nw; i-- > word;) {
        uint64_t v = bits_[i - word] << bit;
        if (i - word > 0) v |= bits_[i - word - 1] >> (64 - bit);
        bits_[i] |= v;
      }
    }
    // mask stray bits above max_degree_ so tests stay exact
    const long long top = max_degree_ + 1;
    if (top % 64 != 0) bits_[nw - 1] &= (~0ull) >> (64 - (top % 64));
  }

  long long max_degree_;
  std::vector<uint64_t> bits_;
};

inline ReachSet reachable_degrees(const std::vector<int>& weights, long long max_degree) {
  ReachSet r(max_degree);
  for (int w : weights) r.add_generator(w);
  return r;
}

/// True iff `degree` is a non-negative integer combination of the weights.
inline bool representable(long long degree, const std::vector<int>& weights) {
  if (weights.empty()) throw ValidationError("representable: weights must be non-empty");
  if (degree < 0) return false;
  if (degree == 0) return true;
  return reachable_degrees(weights, degree).test(degree);
}

/// Degree-r component dimension of a generic complete-intersection coordinate
/// ring in l+1 unit-weight variables cut by |degrees| generic forms:
/// the nested sum over t_j in [0, d_j) of binom(r - sum t_j + l - s, l - s).
inline BigInt poincare_ci_dimension(int l, const std::vector<int>& degrees, long long r) {
  const int s = static_cast<int>(degrees.size());
  if (s > l) throw ValidationError("poincare_ci_dimension: more forms than the ambient dimension allows");
  if (r < 0) throw ValidationError("poincare_ci_dimension: negative degree");
  for (int d : degrees)
    if (d < 1) throw ValidationError("poincare_ci_dimension: degrees must be positive");

  BigInt total(0);
  std::vector<int> t(static_cast<size_t>(s), 0);
  long long tsum = 0;
  while (true) {
    total += binomial(r - tsum + l - s, l - s);
    int j = 0;
    for (; j < s; ++j) {
      if (t[static_cast<size_t>(j)] + 1 < degrees[static_cast<size_t>(j)]) {
        ++t[static_cast<size_t>(j)];
        ++tsum;
        break;
      }
      tsum -= t[static_cast<size_t>(j)];
      t[static_cast<size_t>(j)] = 0;
    }
    if (j == s) break;
  }
  return total;
}

}  // namespace wci
