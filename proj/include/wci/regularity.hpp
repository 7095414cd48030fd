/// @file regularity.hpp
/// @brief Regularity of the general member: quasi-smoothness of hypersurfaces,
///        well-formedness of the subvariety, and smoothness certification.
///
/// All verdicts describe the generic member of a family; no individual
/// equation set is ever analyzed.

#pragma once

#include <map>
#include <vector>

#include "wci/counting.hpp"
#include "wci/family.hpp"

namespace wci {

enum class Verdict { Certified, Refuted, Undetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::Refuted: return "refuted";
    default: return "undetermined";
  }
}

struct RegularityReport {
  bool wps_well_formed = false;
  bool linear_cone = false;
  Verdict wci_well_formed = Verdict::Undetermined;
  Verdict quasi_smooth = Verdict::Undetermined;
  Verdict smooth = Verdict::Undetermined;
};

namespace detail {

/// Distinct weight values with multiplicities, smallest first.
inline std::vector<std::pair<int, int>> value_multiplicities(const std::vector<int>& weights) {
  std::vector<std::pair<int, int>> vm;
  for (int w : weights) {
    if (!vm.empty() && vm.back().first == w)
      ++vm.back().second;
    else
      vm.emplace_back(w, 1);
  }
  return vm;
}

/// Semigroup reach sets for every non-empty subset of distinct weight values,
/// bits up to max_degree.  Indexed by subset mask over the distinct values.
inline std::vector<ReachSet> subset_reach_sets(const std::vector<std::pair<int, int>>& values,
                                               long long max_degree) {
  const size_t m = values.size();
  std::vector<ReachSet> reach;
  reach.reserve(size_t(1) << m);
  reach.emplace_back(max_degree);  // empty subset: {0}
  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    const size_t low = mask & (~mask + 1);
    size_t low_index = 0;
    while (!((mask >> low_index) & 1)) ++low_index;
    ReachSet r = reach[mask ^ low];
    r.add_generator(values[low_index].first);
    reach.push_back(std::move(r));
  }
  return reach;
}

}  // namespace detail

/// Exact quasi-smoothness of the general hypersurface of the given degree:
/// for every non-empty subset I of variable indices, either the degree is a
/// monomial purely in the I-variables, or there are |I| distinct outside
/// variables e with a monomial (I-monomial) * x_e of the degree.  Membership
/// only depends on the set of distinct weight values in I, and for a fixed
/// value set the maximal index subset is the binding one, so the check runs
/// over value subsets with full multiplicities.
inline Verdict quasi_smooth_hypersurface(const std::vector<int>& weights_in, int degree) {
  std::vector<int> weights = weights_in;
  std::sort(weights.begin(), weights.end());
  if (weights.size() < 2 || weights.front() < 1)
    throw ValidationError("quasi_smooth_hypersurface: need sorted positive weights");
  if (degree < 2) throw ValidationError("quasi_smooth_hypersurface: degree must be at least 2");
  if (std::binary_search(weights.begin(), weights.end(), degree))
    throw ValidationError("quasi_smooth_hypersurface: criterion requires a non-cone (degree equals a weight)");

  const auto values = detail::value_multiplicities(weights);
  const auto reach = detail::subset_reach_sets(values, degree);
  const size_t m = values.size();

  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    if (reach[mask].test(degree)) continue;  // monomial in the I-variables alone
    int subset_size = 0;
    for (size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1) subset_size += values[i].second;
    int qualifying = 0;
    for (size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) continue;  // outside variables only (inside ones imply the monomial case)
      if (reach[mask].test(degree - values[i].first)) qualifying += values[i].second;
    }
    if (qualifying < subset_size) return Verdict::Refuted;
  }
  return Verdict::Certified;
}

/// Well-formedness of the subvariety: for every singular stratum of the
/// ambient space (weight subset with gcd > 1), the generic intersection
/// dimension (|I| - 1) - #{degrees representable in the stratum semigroup}
/// must be at most n - 2.  Negative values mean the general member misses
/// the stratum entirely.
inline Verdict wci_well_formed(const Family& f) {
  if (!is_wps_well_formed(f)) return Verdict::Refuted;
  const int n = f.dimension();
  const auto values = detail::value_multiplicities(f.weights());
  const long long max_degree = f.max_degree();
  const auto reach = detail::subset_reach_sets(values, max_degree);
  const size_t m = values.size();

  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    long long g = 0;
    int index_count = 0;
    for (size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) {
        g = gcd_ll(g, values[i].first);
        index_count += values[i].second;
      }
    }
    if (g <= 1) continue;
    int representable_degrees = 0;
    for (int d : f.degrees())
      if (reach[mask].test(d)) ++representable_degrees;
    if (index_count - 1 - representable_degrees > n - 2) return Verdict::Refuted;
  }
  return Verdict::Certified;
}

namespace detail {

/// True iff some singular stratum provably meets the general member
/// (generic intersection dimension >= 0 on a gcd>1 stratum).
inline bool meets_singular_locus(const Family& f) {
  const auto values = value_multiplicities(f.weights());
  const auto reach = subset_reach_sets(values, f.max_degree());
  const size_t m = values.size();
  for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
    long long g = 0;
    int index_count = 0;
    for (size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) {
        g = gcd_ll(g, values[i].first);
        index_count += values[i].second;
      }
    }
    if (g <= 1) continue;
    int representable_degrees = 0;
    for (int d : f.degrees())
      if (reach[mask].test(d)) ++representable_degrees;
    if (index_count - 1 - representable_degrees >= 0) return true;
  }
  return false;
}

}  // namespace detail

/// Smoothness of the general member, in the sense of the smooth well formed
/// class: Certified means the generic member is a smooth well formed WCI.
///
///   certified: (a) all weights 1 and not a linear cone (Bertini), or
///              (b) k = 1, quasi-smooth certified, well formed, and every
///                  singular stratum misses the general member.
///   refuted:   a necessary condition fails (ambient or subvariety
///              well-formedness, the gcd/degree divisibility condition, the
///              Fano bounds, quasi-smoothness for k = 1, or a well formed
///              member meets the singular locus).
///   undetermined: genuinely weighted k >= 2 families that survive every
///              necessary check, and linear cones.
inline Verdict smooth_general_member(const Family& f) {
  if (!is_wps_well_formed(f)) return Verdict::Refuted;
  if (is_linear_cone(f)) return Verdict::Undetermined;
  if (f.all_unit_weights()) return Verdict::Certified;
  if (!gcd_degree_condition(f)) return Verdict::Refuted;
  if (f.anticanonical_degree() > 0 && !smooth_fano_necessary(f)) return Verdict::Refuted;
  if (wci_well_formed(f) == Verdict::Refuted) return Verdict::Refuted;
  if (detail::meets_singular_locus(f)) return Verdict::Refuted;
  if (f.codimension() == 1) {
    const Verdict qs = quasi_smooth_hypersurface(f.weights(), f.degrees()[0]);
    return qs == Verdict::Certified ? Verdict::Certified : Verdict::Refuted;
  }
  return Verdict::Undetermined;
}

inline RegularityReport regularity_report(const Family& f) {
  RegularityReport rep;
  rep.wps_well_formed = is_wps_well_formed(f);
  rep.linear_cone = is_linear_cone(f);
  rep.wci_well_formed = wci_well_formed(f);
  if (!rep.linear_cone && f.codimension() == 1) {
    rep.quasi_smooth = quasi_smooth_hypersurface(f.weights(), f.degrees()[0]);
  } else if (!rep.linear_cone && f.all_unit_weights()) {
    rep.quasi_smooth = Verdict::Certified;  // generic straight CI: smooth cone off the origin
  } else {
    rep.quasi_smooth = Verdict::Undetermined;
  }
  rep.smooth = smooth_general_member(f);
  return rep;
}

}  // namespace wci
