#include <catch2/catch.hpp>

#include "wci/counting.hpp"
#include "wci/modular.hpp"

using namespace wci;

namespace {

// independent oracle: count exponent vectors by direct enumeration
long long brute_force_count(const std::vector<int>& weights, long long degree, size_t var = 0) {
  if (var == weights.size()) return degree == 0 ? 1 : 0;
  long long total = 0;
  for (long long m = 0; m * weights[var] <= degree; ++m)
    total += brute_force_count(weights, degree - m * weights[var], var + 1);
  return total;
}

// independent oracle: coefficient of z^r in prod (1 - z^{d_i}) / (1-z)^{l+1}
// by explicit truncated series multiplication
BigInt series_coefficient(int l, const std::vector<int>& degrees, long long r) {
  std::vector<BigInt> series(static_cast<size_t>(r) + 1);
  for (long long e = 0; e <= r; ++e) series[static_cast<size_t>(e)] = binomial(e + l, l);
  for (int d : degrees) {
    std::vector<BigInt> next = series;
    for (long long e = d; e <= r; ++e)
      next[static_cast<size_t>(e)] -= series[static_cast<size_t>(e - d)];
    series = std::move(next);
  }
  return series[static_cast<size_t>(r)];
}

}  // namespace

TEST_CASE("binomial values and conventions") {
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(8, 5) == 56);
  CHECK(binomial(-2, 3) == 0);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  // values that overflow any fixed-width type
  CHECK(binomial(200, 100) % 997 == binomial(200, 100) % 997);
  CHECK(binomial(200, 100).get_str().size() > 19);
}

TEST_CASE("polynomial binomial handles negative tops") {
  CHECK(binomial_poly(-1, 5) == -1);
  CHECK(binomial_poly(-3, 3) == -10);
  CHECK(binomial_poly(4, 2) == 6);
  CHECK(binomial_poly(7, 0) == 1);
}

TEST_CASE("count_monomials matches direct enumeration") {
  CHECK(count_monomials({1, 1, 1, 1, 1}, 3) == 35);
  CHECK(count_monomials({1, 1, 2}, 4) == 9);
  CHECK(count_monomials({4, 5, 6}, 0) == 1);
  CHECK(count_monomials({2, 2}, 3) == 0);

  SplitMix64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t nvars = 1 + rng.next() % 6;
    std::vector<int> weights;
    for (size_t i = 0; i < nvars; ++i) weights.push_back(1 + static_cast<int>(rng.next() % 7));
    const long long degree = static_cast<long long>(rng.next() % 21);
    CAPTURE(weights, degree);
    CHECK(count_monomials(weights, degree) == big(brute_force_count(weights, degree)));
  }
}

TEST_CASE("weighted degree table invariants") {
  const auto table = WeightedDegreeTable::build({1, 1, 2, 3}, 12);
  CHECK(table.at(0) == 1);
  CHECK(table.at(-1) == 0);
  for (long long e = 0; e <= 12; ++e)
    CHECK(table.at(e) == big(brute_force_count({1, 1, 2, 3}, e)));
}

TEST_CASE("numerical semigroup membership") {
  CHECK(representable(5, {2, 3}));
  CHECK_FALSE(representable(1, {2, 3}));
  CHECK(representable(16, {4, 5, 6}));
  CHECK(representable(0, {7}));
  CHECK(representable(13, {4, 5, 6}));
  CHECK_FALSE(representable(7, {4, 5, 6}));
  CHECK_FALSE(representable(3, {2}));
}

TEST_CASE("complete intersection series dimensions") {
  CHECK(poincare_ci_dimension(5, {2, 3}, 2) == 20);
  CHECK(poincare_ci_dimension(4, {}, 2) == 15);
  CHECK(poincare_ci_dimension(3, {2, 2, 2}, 0) == 1);
  CHECK_THROWS_AS(poincare_ci_dimension(1, {2, 2}, 3), ValidationError);

  SECTION("equals the truncated series product") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const int l = 1 + static_cast<int>(rng.next() % 7);
      std::vector<int> degrees;
      const int s = static_cast<int>(rng.next() % (l + 1));
      for (int i = 0; i < s; ++i) degrees.push_back(2 + static_cast<int>(rng.next() % 5));
      const long long r = static_cast<long long>(rng.next() % 15);
      CAPTURE(l, degrees, r);
      CHECK(poincare_ci_dimension(l, degrees, r) == series_coefficient(l, degrees, r));
    }
  }

  SECTION("lower bounds") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const int l = 2 + static_cast<int>(rng.next() % 6);
      std::vector<int> degrees;
      const int s = static_cast<int>(rng.next() % std::min(l, 3));
      for (int i = 0; i < s; ++i) degrees.push_back(2 + static_cast<int>(rng.next() % 4));
      const long long r = static_cast<long long>(rng.next() % 12);
      const BigInt dim = poincare_ci_dimension(l, degrees, r);
      CHECK(dim >= binomial(r + l - s, r));
      if (r > 0) CHECK(dim >= binomial(r + l - s, r) + s);
    }
  }
}

TEST_CASE("reach sets agree with representability") {
  const std::vector<int> weights = {4, 6, 9};
  const ReachSet reach = reachable_degrees(weights, 40);
  for (long long e = 0; e <= 40; ++e)
    CHECK(reach.test(e) == (brute_force_count(weights, e) > 0));
}
