/// @file jacobian.hpp
/// @brief Dimensions of bigraded Jacobian-ring components, middle Hodge rows,
///        Hodge diamonds, closed forms and certified lower bounds.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "wci/chi.hpp"
#include "wci/counting.hpp"
#include "wci/family.hpp"
#include "wci/macaulay.hpp"
#include "wci/milnor.hpp"
#include "wci/modular.hpp"
#include "wci/regularity.hpp"

namespace wci {

inline constexpr uint64_t kDefaultSeed = 0x77636948u;  // arbitrary fixed constant

struct HodgeOptions {
  uint64_t seed = kDefaultSeed;
  int prime_index = 0;
  int trials = 3;
  long long capacity = 200000;      ///< hard cap on materialized basis columns
  long long rank_threshold = 800;   ///< above this, prefer an exact route
  bool force_rank = false;          ///< disable the exact routes (testing)
};

/// Immutable per-family context: invariants plus the facts the dispatch needs.
struct BigradedContext {
  Family family;
  InvariantSummary inv;
  Verdict hypersurface_quasi_smooth = Verdict::Undetermined;

  static BigradedContext make(const Family& f) {
    BigradedContext ctx{f, summarize(f)};
    if (f.codimension() == 1 && !is_linear_cone(f))
      ctx.hypersurface_quasi_smooth = quasi_smooth_hypersurface(f.weights(), f.degrees()[0]);
    return ctx;
  }
};

namespace detail {

inline long long rank_path_dimension(const BigradedContext& ctx, int q, long long e,
                                     const HodgeOptions& opts, size_t basis_size) {
  const uint32_t p = prime_by_index(opts.prime_index);
  const BigradedBasis basis = bigraded_basis(ctx.family, q, e);
  if (basis.size != basis_size) throw Error("jacobian: basis count mismatch");
  const std::string key = format_family(ctx.family);
  long long best = static_cast<long long>(basis.size);
  const int trials = std::max(1, opts.trials);
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = piece_stream(opts.seed, key, q, trial);
    const RandomMember member = random_member(ctx.family, rng, p);
    const size_t rank = jacobian_piece_rank(ctx.family, member, basis, q, e, p);
    // random specialization can only raise the dimension, so keep the minimum
    best = std::min(best, static_cast<long long>(basis.size - rank));
  }
  return best;
}

/// Koszul alternating count for the w-degree-0 piece (the ideal generated by
/// the equations themselves; generic members form a regular sequence).
inline BigInt structure_piece_dimension(const Family& f, long long e) {
  if (e < 0) return BigInt(0);
  const size_t k = f.degrees().size();
  const long long max_degree = std::max<long long>(e, f.max_degree());
  const auto table = count_table<BigInt>(f.weights(), max_degree);
  for (int d : f.degrees())
    if (table[static_cast<size_t>(d)] == 0)
      throw ValidationError("dim_graded_piece: no monomial of degree " + std::to_string(d) +
                            " exists, the linear system is empty");
  BigInt total(0);
  for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
    long long sum = 0;
    int bits = 0;
    for (size_t j = 0; j < k; ++j)
      if ((mask >> j) & 1) {
        sum += f.degrees()[j];
        ++bits;
      }
    if (e - sum < 0) continue;
    const BigInt& c = table[static_cast<size_t>(e - sum)];
    total += bits % 2 == 0 ? c : -c;
  }
  if (total < 0) throw Error("dim_graded_piece: negative structure-piece count");
  return total;
}

}  // namespace detail

/// dim R_{q, -i_X} for a generic member of the family.
///
/// Dispatch: the randomized prime-field Macaulay rank is the engine; above
/// `rank_threshold` columns two exact routes take over where a theorem backs
/// them (quasi-smooth hypersurfaces: Jacobian-ring Hilbert series; all-unit
/// weights: Euler-characteristic recursion).  Both are cross-asserted against
/// the rank path in the test suite.
inline long long dim_graded_piece(const BigradedContext& ctx, int q, const HodgeOptions& opts = {}) {
  if (q < 0) return 0;
  const long long i_X = ctx.inv.i_X;
  const int n = ctx.inv.n;
  if (i_X <= 0 && q > n)
    throw ValidationError("dim_graded_piece: q > n with i_X <= 0 is outside the graded range");
  const long long e = -i_X;

  const BigInt basis_count = bigraded_dimension(ctx.family, q, e);
  if (basis_count == 0) return 0;

  if (q == 0 && !opts.force_rank)
    return checked_ll(detail::structure_piece_dimension(ctx.family, e), "dim_graded_piece");

  const bool oversized = basis_count > big(opts.rank_threshold);
  if (oversized && !opts.force_rank) {
    if (ctx.family.codimension() == 1 && ctx.hypersurface_quasi_smooth == Verdict::Certified) {
      const long long milnor_deg = static_cast<long long>(q) * ctx.inv.d - i_X;
      return checked_ll(milnor_dimension(ctx.family.weights(), ctx.inv.d, milnor_deg),
                        "dim_graded_piece");
    }
    if (ctx.family.all_unit_weights() && q <= n) {
      CompleteIntersectionChi chi(ctx.inv.N, ctx.family.degrees());
      const int p = std::min(q, n - q);
      BigInt h = chi.middle_hodge(p);
      if (2 * q == n) h -= 1;  // primitive part drops the polarization class
      return checked_ll(h, "dim_graded_piece");
    }
  }

  if (basis_count > big(opts.capacity))
    throw CapacityError("dim_graded_piece: basis of " + basis_count.get_str() +
                        " monomials exceeds capacity " + std::to_string(opts.capacity));
  return detail::rank_path_dimension(ctx, q, e, opts,
                                     static_cast<size_t>(basis_count.get_ui()));
}

/// Primitive middle Hodge numbers h_pr^{q, n-q}, entry q of n+1.
struct MiddleRow {
  int n = 0;
  std::vector<long long> values;

  long long full(int q) const {  // h^{q, n-q} including the polarization class
    return values[static_cast<size_t>(q)] + (2 * q == n ? 1 : 0);
  }
};

inline MiddleRow middle_row(const BigradedContext& ctx, const HodgeOptions& opts = {}) {
  if (ctx.inv.i_X <= 0)
    throw ValidationError("middle_row: requires a Fano family (i_X > 0)");
  const int n = ctx.inv.n;
  MiddleRow row{n, std::vector<long long>(static_cast<size_t>(n) + 1, 0)};
  const bool single_quadric =
      ctx.family.codimension() == 1 && ctx.inv.d == 2 && ctx.family.all_unit_weights();
  if (single_quadric) {
    if (n % 2 == 0) row.values[static_cast<size_t>(n / 2)] = 1;
    return row;
  }
  for (int q = 0; 2 * q <= n; ++q) {
    const long long v = dim_graded_piece(ctx, q, opts);
    row.values[static_cast<size_t>(q)] = v;
    row.values[static_cast<size_t>(n - q)] = v;
  }
  return row;
}

/// Full Hodge table: h^{p,q} = delta_{pq} off the middle anti-diagonal,
/// middle entries are the primitive row plus the polarization class at the
/// center.
struct HodgeDiamond {
  int n = 0;
  std::vector<long long> table;  // row-major (n+1) x (n+1)

  long long at(int p, int q) const {
    return table[static_cast<size_t>(p) * (static_cast<size_t>(n) + 1) + static_cast<size_t>(q)];
  }
};

inline HodgeDiamond hodge_diamond(const MiddleRow& row) {
  const int n = row.n;
  HodgeDiamond d{n, std::vector<long long>((static_cast<size_t>(n) + 1) * (static_cast<size_t>(n) + 1), 0)};
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      long long v = (p == q) ? 1 : 0;
      if (p + q == n) v += row.values[static_cast<size_t>(p)];
      d.table[static_cast<size_t>(p) * (static_cast<size_t>(n) + 1) + static_cast<size_t>(q)] = v;
    }
  return d;
}

inline HodgeDiamond hodge_diamond(const BigradedContext& ctx, const HodgeOptions& opts = {}) {
  return hodge_diamond(middle_row(ctx, opts));
}

/// Exact value or certified lower bound for h_pr^{p_X, n-p_X}.
struct ValueOrBound {
  bool exact = false;
  BigInt value;
};

/// Closed forms for Fano complete intersections of k1 quadrics and k2 cubics
/// in P^N.  Exact cases: the single quadric, all-quadrics with even i_X
/// (degree-p_X monomial count in the w-variables), and the cubic cases with
/// r = 0 or r = 1; the remaining cases return certified lower bounds.  The
/// r = 1 value carries the k1-term for mixed intersections: the Jacobian
/// ideal meets the bidegree trivially, so the dimension is the full monomial
/// count, quadric w-factors included.
inline ValueOrBound quadric_cubic_closed_forms(int N, int k1, int k2) {
  if (k1 < 0 || k2 < 0 || k1 + k2 < 1)
    throw ValidationError("closed forms: need k1, k2 >= 0 with k1 + k2 >= 1");
  if (k1 + k2 >= N) throw ValidationError("closed forms: codimension too large");
  const long long i_X = static_cast<long long>(N) + 1 - 2 * k1 - 3 * k2;
  if (i_X <= 0) throw ValidationError("closed forms: not Fano");
  const int n = N - k1 - k2;

  if (k2 == 0 && k1 == 1)  // quadric hypersurface
    return {true, BigInt(n % 2 == 0 ? 1 : 0)};

  if (k2 == 0) {
    const long long p = ceil_div(i_X, 2);
    if (i_X % 2 == 0) return {true, binomial(p + k1 - 1, k1 - 1)};
    return {false, BigInt(k1) * binomial(k1 + p - 2, p)};
  }

  const long long p = ceil_div(i_X, 3);
  const long long r = 3 * p - i_X;
  if (r == 0) return {true, binomial(k2 + p - 1, k2 - 1)};
  if (r == 1)
    return {true, BigInt(N + 1) * binomial(k2 + p - 1, k2 - 1) +
                      BigInt(k1) * binomial(k2 + p - 2, k2 - 1)};
  return {false, BigInt(N) * (N + 1) / 2 * binomial(k2 + p - 1, k2 - 1)};
}

/// Certified lower bound for h_pr^{p_X, n-p_X} of a Fano family with d >= 3;
/// exactly 1 when k = s+1 and r = 0.
inline ValueOrBound lower_bound(const InvariantSummary& inv) {
  if (inv.i_X <= 0) throw ValidationError("lower_bound: requires a Fano family");
  if (inv.d < 3) throw ValidationError("lower_bound: stated for top degree >= 3");
  const long long p = *inv.p_X;
  const long long r = *inv.r;
  if (inv.k == inv.s + 1 && r == 0) return {true, BigInt(1)};
  const BigInt first = binomial(p + inv.k - inv.s - 1, p);
  BigInt second;
  if (r < inv.d - 1)
    second = binomial(r + inv.l - inv.s, r);
  else
    second = binomial(inv.d - 1 + inv.l - inv.s, inv.d - 1) + inv.s - inv.l - 1;
  BigInt value = first * second;
  if (value < 0) value = 0;
  return {false, value};
}

}  // namespace wci
