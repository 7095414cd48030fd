#include <catch2/catch.hpp>

#include "wci/modular.hpp"
#include "wci/regularity.hpp"

using namespace wci;

namespace {

bool monomial_exists(const std::vector<int>& weights, const std::vector<size_t>& support,
                     long long degree, size_t at = 0) {
  if (degree == 0) return true;
  if (at == support.size()) return false;
  for (long long m = 0; m * weights[support[at]] <= degree; ++m)
    if (monomial_exists(weights, support, degree - m * weights[support[at]], at + 1)) return true;
  return false;
}

// direct restatement of the quasi-smoothness criterion over raw index
// subsets, with monomials found by exponent enumeration
bool brute_force_quasi_smooth(const std::vector<int>& weights, int degree) {
  const size_t nvars = weights.size();
  for (size_t mask = 1; mask < (size_t(1) << nvars); ++mask) {
    std::vector<size_t> inside;
    std::vector<size_t> outside;
    for (size_t i = 0; i < nvars; ++i)
      ((mask >> i) & 1 ? inside : outside).push_back(i);
    if (monomial_exists(weights, inside, degree)) continue;
    size_t qualifying = 0;
    for (size_t e : outside)
      if (degree - weights[e] >= 0 && monomial_exists(weights, inside, degree - weights[e]))
        ++qualifying;
    if (qualifying < inside.size()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("quasi-smooth hypersurface criterion") {
  CHECK(quasi_smooth_hypersurface({1, 1, 1, 1, 2, 2}, 4) == Verdict::Certified);
  CHECK(quasi_smooth_hypersurface({1, 4, 5, 6, 8, 8, 8, 8}, 16) == Verdict::Certified);
  CHECK(quasi_smooth_hypersurface({1, 1, 1, 3}, 2) == Verdict::Refuted);
  CHECK(quasi_smooth_hypersurface({1, 1, 1, 3, 3, 3}, 6) == Verdict::Certified);
  CHECK(quasi_smooth_hypersurface({1, 1, 1, 1, 1}, 4) == Verdict::Certified);
  CHECK(quasi_smooth_hypersurface({1, 1, 2, 3}, 6) == Verdict::Certified);
  CHECK_THROWS_AS(quasi_smooth_hypersurface({1, 1, 2}, 2), ValidationError);  // linear cone

  SECTION("agrees with the index-subset restatement") {
    SplitMix64 rng(23);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const size_t nvars = 3 + rng.next() % 3;  // 3..5 variables
      std::vector<int> weights;
      for (size_t i = 0; i < nvars; ++i) weights.push_back(1 + static_cast<int>(rng.next() % 8));
      std::sort(weights.begin(), weights.end());
      const int degree = 2 + static_cast<int>(rng.next() % 13);
      if (std::binary_search(weights.begin(), weights.end(), degree)) continue;
      CAPTURE(weights, degree);
      const bool expected = brute_force_quasi_smooth(weights, degree);
      CHECK((quasi_smooth_hypersurface(weights, degree) == Verdict::Certified) == expected);
      ++compared;
    }
    CHECK(compared > 250);
  }
}

TEST_CASE("well-formedness of the subvariety") {
  CHECK(wci_well_formed(Family::create({1, 1, 2, 3}, {6})) == Verdict::Certified);
  CHECK(wci_well_formed(Family::create({1, 1, 1, 2, 3}, {6})) == Verdict::Certified);
  CHECK(wci_well_formed(Family::create({1, 1, 2, 2}, {3})) == Verdict::Refuted);
  // ambient space not well formed
  CHECK(wci_well_formed(Family::create({1, 2, 2}, {3})) == Verdict::Refuted);
}

TEST_CASE("smoothness of the general member") {
  CHECK(smooth_general_member(Family::create({1, 1, 1, 1, 3}, {6})) == Verdict::Certified);
  CHECK(smooth_general_member(Family::create({1, 1, 1, 1, 2, 2}, {4})) == Verdict::Refuted);
  CHECK(smooth_general_member(Family::create({1, 1, 1, 1, 1, 1, 1}, {2, 2, 2})) ==
        Verdict::Certified);
  // quasi-smooth but touches a singular point: degree not divisible by the weight
  CHECK(smooth_general_member(Family::create({1, 1, 1, 2}, {3})) == Verdict::Refuted);
  // weighted codimension two: survives every necessary test, stays open
  CHECK(smooth_general_member(Family::create({1, 1, 1, 1, 1, 2, 2}, {4, 4})) ==
        Verdict::Undetermined);

  SECTION("reference families are all certified") {
    const char* families[] = {
        "P(1^3) : 2",      "P(1^2,2,3) : 6", "P(1^3,2) : 4", "P(1^4) : 3",    "P(1^5) : 2^2",
        "P(1^4) : 2",      "P(1^4,3) : 6",   "P(1^5) : 4",   "P(1^6) : 2,3",  "P(1^7) : 2^3",
        "P(1^3,2,3) : 6",  "P(1^4,2) : 4",   "P(1^5) : 3",   "P(1^6) : 2^2",  "P(1^5) : 2",
    };
    for (const char* text : families) {
      const Family f = parse_family(text);
      CAPTURE(text);
      CHECK(is_wps_well_formed(f));
      CHECK_FALSE(is_linear_cone(f));
      CHECK(gcd_degree_condition(f));
      CHECK(smooth_fano_necessary(f));
      CHECK(wci_well_formed(f) == Verdict::Certified);
      CHECK(smooth_general_member(f) == Verdict::Certified);
    }
  }

  SECTION("certified smoothness implies the divisibility condition") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
      const size_t nvars = 4 + rng.next() % 3;
      std::vector<int> weights;
      for (size_t i = 0; i < nvars; ++i) weights.push_back(1 + static_cast<int>(rng.next() % 5));
      std::sort(weights.begin(), weights.end());
      const int degree = 2 + static_cast<int>(rng.next() % 10);
      if (std::binary_search(weights.begin(), weights.end(), degree)) continue;
      const Family f = Family::create(weights, {degree});
      if (smooth_general_member(f) == Verdict::Certified) {
        CAPTURE(weights, degree);
        CHECK(gcd_degree_condition(f));
        CHECK(wci_well_formed(f) == Verdict::Certified);
        CHECK(quasi_smooth_hypersurface(weights, degree) == Verdict::Certified);
      }
    }
  }
}

TEST_CASE("regularity report is consistent") {
  const RegularityReport rep = regularity_report(Family::create({1, 1, 1, 1, 2, 2}, {4}));
  CHECK(rep.wps_well_formed);
  CHECK_FALSE(rep.linear_cone);
  CHECK(rep.wci_well_formed == Verdict::Certified);
  CHECK(rep.quasi_smooth == Verdict::Certified);
  CHECK(rep.smooth == Verdict::Refuted);

  const RegularityReport cone = regularity_report(Family::create({1, 1, 2}, {2}));
  CHECK(cone.linear_cone);
  CHECK(cone.quasi_smooth == Verdict::Undetermined);

  SECTION("a certified smooth verdict certifies the rest") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> weights;
      const size_t nvars = 4 + rng.next() % 3;
      for (size_t i = 0; i < nvars; ++i) weights.push_back(1 + static_cast<int>(rng.next() % 4));
      std::vector<int> degrees = {2 + static_cast<int>(rng.next() % 6)};
      std::sort(weights.begin(), weights.end());
      Family f = Family::create(weights, degrees);
      const RegularityReport rep_f = regularity_report(f);
      if (rep_f.smooth == Verdict::Certified) {
        CHECK(rep_f.quasi_smooth == Verdict::Certified);
        CHECK(rep_f.wci_well_formed == Verdict::Certified);
      }
    }
  }
}
