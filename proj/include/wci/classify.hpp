/// @file classify.hpp
/// @brief Hodge level and Hodge-theoretic type predicates, each with a
///        structural route (closed classification) and a computational route
///        (recomputed from the middle row), cross-asserted in the tests.

#pragma once

#include <optional>

#include "wci/jacobian.hpp"

namespace wci {

/// Hodge level is an integer or -infinity; absence encodes -infinity.
using HodgeLevel = std::optional<long long>;

struct TypeLabels {
  HodgeLevel hodge_level;
  bool q_homologically_minimal = false;
  bool diagonal = false;
  bool curve_type = false;
  std::optional<int> cy_type;  ///< m when the family is of m-Calabi-Yau type
};

namespace detail {

inline void require_certified_smooth_fano(const Family& f, const RegularityReport& rep) {
  if (is_linear_cone(f))
    throw ValidationError("classify: linear cones are excluded");
  if (f.anticanonical_degree() <= 0)
    throw ValidationError("classify: requires a Fano family");
  if (rep.smooth != Verdict::Certified)
    throw ValidationError("classify: requires a certified-smooth family");
}

inline bool is_quadric_hypersurface(const Family& f) {
  return f.codimension() == 1 && f.max_degree() == 2 && f.all_unit_weights();
}

inline bool is_all_quadrics(const Family& f) {
  return f.all_unit_weights() && f.max_degree() == 2;
}

inline bool is_quadrics_and_cubics(const Family& f) {
  return f.all_unit_weights() && f.max_degree() <= 3;
}

}  // namespace detail

// --- structural route ----------------------------------------------------

inline HodgeLevel hodge_level(const Family& f, const RegularityReport& rep) {
  detail::require_certified_smooth_fano(f, rep);
  const InvariantSummary inv = summarize(f);
  if (detail::is_quadric_hypersurface(f) && inv.n % 2 == 1) return std::nullopt;
  return inv.n - 2ll * *inv.p_X;
}

inline bool is_q_homologically_minimal(const Family& f, const RegularityReport& rep) {
  detail::require_certified_smooth_fano(f, rep);
  return detail::is_quadric_hypersurface(f) && f.dimension() % 2 == 1;
}

/// Diagonal families: everything of dimension <= 2, quadrics, and
/// even-dimensional intersections of two quadrics.
inline bool is_diagonal(const Family& f, const RegularityReport& rep) {
  detail::require_certified_smooth_fano(f, rep);
  const int n = f.dimension();
  if (n <= 2) return true;
  if (detail::is_quadric_hypersurface(f)) return true;
  return n % 2 == 0 && detail::is_all_quadrics(f) && f.codimension() == 2;
}

/// Curve type: n = 1 or n = 3, odd-dimensional intersections of at most three
/// quadrics, and the five-dimensional cubic.
inline bool is_curve_type(const Family& f, const RegularityReport& rep) {
  detail::require_certified_smooth_fano(f, rep);
  const int n = f.dimension();
  if (n % 2 == 0) return false;
  if (n == 1 || n == 3) return true;
  if (detail::is_all_quadrics(f) && f.codimension() <= 3) return true;
  return n == 5 && f.codimension() == 1 && f.max_degree() == 3 && f.all_unit_weights();
}

/// m-Calabi-Yau type: the top degree is strictly maximal (or k = 1), it
/// divides i_X, and m = n - 2 i_X / d is positive.  m = 0 outputs are mapped
/// to absent: those families are diagonal instead.
inline std::optional<int> cy_type(const Family& f, const RegularityReport& rep) {
  detail::require_certified_smooth_fano(f, rep);
  const InvariantSummary inv = summarize(f);
  if (inv.k > 1 && f.degrees()[static_cast<size_t>(inv.k) - 2] == inv.d) return std::nullopt;
  if (inv.i_X % inv.d != 0) return std::nullopt;
  const long long m = inv.n - 2 * (inv.i_X / inv.d);
  if (m < 1) return std::nullopt;
  return static_cast<int>(m);
}

/// General floor: hh >= ceil((n-4)/3) for every non-all-quadrics family, and
/// under the small-index hypotheses hh = n-2 exactly (odd-dimensional quadrics
/// carved out, matching the hypothesis of the level formula itself).
struct HodgeLevelFloor {
  long long floor = 0;
  std::optional<long long> exact;  ///< set when the small-index case applies
};

inline HodgeLevelFloor hodge_level_floor(const Family& f, const RegularityReport& rep) {
  detail::require_certified_smooth_fano(f, rep);
  if (detail::is_all_quadrics(f))
    throw ValidationError("hodge_level_floor: excluded for complete intersections of quadrics");
  const InvariantSummary inv = summarize(f);
  HodgeLevelFloor result;
  result.floor = ceil_div(inv.n - 4, 3);
  const bool odd_quadric = detail::is_quadric_hypersurface(f) && inv.n % 2 == 1;
  const bool small_index =
      inv.i_X <= 2 || (inv.i_X <= 3 && !detail::is_all_quadrics(f)) ||
      (inv.i_X <= 4 && !detail::is_quadrics_and_cubics(f));
  if (small_index && !odd_quadric) result.exact = inv.n - 2ll;
  return result;
}

inline TypeLabels labels_structural(const Family& f, const RegularityReport& rep) {
  TypeLabels t;
  t.hodge_level = hodge_level(f, rep);
  t.q_homologically_minimal = is_q_homologically_minimal(f, rep);
  t.diagonal = is_diagonal(f, rep);
  t.curve_type = is_curve_type(f, rep);
  t.cy_type = cy_type(f, rep);
  return t;
}

// --- computational route (from the middle row) ---------------------------

inline HodgeLevel hodge_level_from_row(const MiddleRow& row) {
  int lo = -1;
  for (int q = 0; q <= row.n; ++q) {
    if (row.full(q) != 0) {
      lo = q;
      break;
    }
  }
  if (lo < 0) return std::nullopt;
  return row.n - 2ll * lo;  // symmetric row: the top nonzero sits at n - lo
}

inline bool is_minimal_from_row(const MiddleRow& row) {
  for (int q = 0; q <= row.n; ++q)
    if (row.values[static_cast<size_t>(q)] != 0) return false;
  return true;
}

inline bool is_diagonal_from_row(const MiddleRow& row) {
  const HodgeLevel hh = hodge_level_from_row(row);
  return !hh.has_value() || *hh <= 0;
}

inline bool is_curve_type_from_row(const MiddleRow& row) {
  if (row.n % 2 == 0) return false;
  const HodgeLevel hh = hodge_level_from_row(row);
  return !hh.has_value() || *hh <= 1;
}

inline std::optional<int> cy_type_from_row(const MiddleRow& row) {
  for (int q = 0; 2 * q <= row.n; ++q) {
    const long long v = row.full(q);
    if (v == 0) continue;
    const long long m = row.n - 2ll * q;
    if (v == 1 && m >= 1) return static_cast<int>(m);
    return std::nullopt;
  }
  return std::nullopt;
}

inline TypeLabels labels_from_row(const MiddleRow& row) {
  TypeLabels t;
  t.hodge_level = hodge_level_from_row(row);
  t.q_homologically_minimal = is_minimal_from_row(row);
  t.diagonal = is_diagonal_from_row(row);
  t.curve_type = is_curve_type_from_row(row);
  t.cy_type = cy_type_from_row(row);
  return t;
}

/// m-Calabi-Yau type of a quasi-smooth well formed Fano hypersurface, decided
/// purely computationally (the structural classification assumes smoothness,
/// which these families need not have).
inline std::optional<int> cy_type_quasismooth_hypersurface(const std::vector<int>& weights,
                                                           int degree,
                                                           const HodgeOptions& opts = {}) {
  const Family f = Family::create(weights, {degree});
  if (is_linear_cone(f)) throw ValidationError("cy_type_quasismooth: linear cones are excluded");
  if (f.anticanonical_degree() <= 0)
    throw ValidationError("cy_type_quasismooth: requires a Fano hypersurface");
  if (quasi_smooth_hypersurface(f.weights(), degree) != Verdict::Certified)
    throw ValidationError("cy_type_quasismooth: quasi-smoothness is not certified");
  const BigradedContext ctx = BigradedContext::make(f);
  const int n = ctx.inv.n;
  for (int q = 0; 2 * q <= n; ++q) {
    long long v = dim_graded_piece(ctx, q, opts);
    if (2 * q == n) ++v;
    if (v == 0) continue;
    const long long m = n - 2ll * q;
    if (v == 1 && m >= 1) return static_cast<int>(m);
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace wci
