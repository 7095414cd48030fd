#include <catch2/catch.hpp>

#include "wci/classify.hpp"

using namespace wci;

namespace {

struct Classified {
  Family family;
  RegularityReport report;
};

Classified certified(const char* text) {
  Family f = parse_family(text);
  return {f, regularity_report(f)};
}

}  // namespace

TEST_CASE("hodge level, structural route") {
  auto level = [](const char* text) {
    const auto c = certified(text);
    return hodge_level(c.family, c.report);
  };
  CHECK(level("P(1^6) : 3") == 2);
  CHECK_FALSE(level("P(1^5) : 2").has_value());  // odd-dimensional quadric
  CHECK(level("P(1^9) : 3") == 3);
  CHECK(level("P(1^4,3) : 6") == 1);
  CHECK(level("P(1^4) : 3") == 0);

  const Family not_certified = parse_family("P(1^4,2^2) : 4");
  CHECK_THROWS_AS(hodge_level(not_certified, regularity_report(not_certified)), ValidationError);
  const Family cone = parse_family("P(1,1,2) : 2");
  CHECK_THROWS_AS(hodge_level(cone, regularity_report(cone)), ValidationError);
}

TEST_CASE("homologically minimal families") {
  auto minimal = [](const char* text) {
    const auto c = certified(text);
    return is_q_homologically_minimal(c.family, c.report);
  };
  CHECK(minimal("P(1^5) : 2"));
  CHECK_FALSE(minimal("P(1^6) : 2"));
  CHECK_FALSE(minimal("P(1^5) : 4"));
  CHECK(minimal("P(1^3) : 2"));  // the conic
}

TEST_CASE("diagonal and curve type families") {
  auto labels = [](const char* text) {
    const auto c = certified(text);
    return std::make_pair(is_diagonal(c.family, c.report), is_curve_type(c.family, c.report));
  };
  CHECK(labels("P(1^7) : 2^2").first);          // even-dimensional two quadrics
  CHECK(labels("P(1^9) : 2^3").second);         // five-dimensional three quadrics
  CHECK(labels("P(1^7) : 3").second);           // cubic fivefold
  CHECK(labels("P(1^4) : 3").first);            // surfaces are always diagonal
  CHECK(labels("P(1^2,2,3) : 6").first);
  CHECK_FALSE(labels("P(1^6) : 3").first);      // K3-type fourfold
  CHECK_FALSE(labels("P(1^6) : 3").second);
  CHECK(labels("P(1^8) : 2^2").second);         // five-dimensional two quadrics
  CHECK_FALSE(labels("P(1^9) : 2^2").second);   // even dimension
  CHECK(labels("P(1^6) : 2^2").second);         // threefolds are curve type
  CHECK_FALSE(labels("P(1^10) : 2^4").second);  // four quadrics
}

TEST_CASE("Calabi-Yau type, structural route") {
  auto cy = [](const char* text) {
    const auto c = certified(text);
    return cy_type(c.family, c.report);
  };
  CHECK(cy("P(1^6) : 3") == 2);
  CHECK(cy("P(1^6,2) : 4") == 3);
  CHECK(cy("P(1^8) : 2,3") == 3);
  CHECK(cy("P(1^9) : 3") == 3);
  CHECK_FALSE(cy("P(1^6) : 2").has_value());    // m = 0 maps to absent
  CHECK_FALSE(cy("P(1^5) : 4").has_value());    // index not divisible
  CHECK_FALSE(cy("P(1^7) : 2^3").has_value());  // repeated top degree
  CHECK_FALSE(cy("P(1^7) : 2^2").has_value());
}

TEST_CASE("hodge level floor and small-index equality") {
  auto floor_of = [](const char* text) {
    const auto c = certified(text);
    return hodge_level_floor(c.family, c.report);
  };
  SECTION("small index pins the level") {
    const auto f = floor_of("P(1^4,3) : 6");
    REQUIRE(f.exact.has_value());
    CHECK(*f.exact == 1);
    const auto c = certified("P(1^4,3) : 6");
    CHECK(hodge_level(c.family, c.report) == *f.exact);
  }
  SECTION("floor values") {
    CHECK(floor_of("P(1^9) : 3").floor == 1);  // ceil(3/3)
    CHECK(floor_of("P(1^4) : 3").floor == 0);  // ceil(-2/3) is 0
    const auto c = certified("P(1^9) : 3");
    CHECK(*hodge_level(c.family, c.report) >= floor_of("P(1^9) : 3").floor);
  }
  SECTION("odd-dimensional quadrics are carved out") {
    const auto conic = certified("P(1^3) : 2");
    CHECK_THROWS_AS(hodge_level_floor(conic.family, conic.report), ValidationError);
  }
  SECTION("cubic fivefold misses every small-index branch") {
    const auto f = floor_of("P(1^7) : 3");
    CHECK_FALSE(f.exact.has_value());  // index 4 on a cubic
    CHECK(f.floor == 1);
    const auto c = certified("P(1^7) : 3");
    CHECK(*hodge_level(c.family, c.report) == 1);  // floor attained
  }
}

TEST_CASE("labels recomputed from rows agree with the structural route") {
  const char* families[] = {"P(1^5) : 2",    "P(1^6) : 2",   "P(1^6) : 3",   "P(1^5) : 4",
                            "P(1^7) : 2^2", "P(1^8) : 2^3", "P(1^6) : 2,3", "P(1^4,3) : 6",
                            "P(1^3) : 2",   "P(1^2,2,3) : 6"};
  for (const char* text : families) {
    CAPTURE(text);
    const auto c = certified(text);
    REQUIRE(c.report.smooth == Verdict::Certified);
    const MiddleRow row = middle_row(BigradedContext::make(c.family));
    const TypeLabels structural = labels_structural(c.family, c.report);
    const TypeLabels computed = labels_from_row(row);
    CHECK(structural.hodge_level == computed.hodge_level);
    CHECK(structural.q_homologically_minimal == computed.q_homologically_minimal);
    CHECK(structural.diagonal == computed.diagonal);
    CHECK(structural.curve_type == computed.curve_type);
    CHECK(structural.cy_type == computed.cy_type);
  }
}

TEST_CASE("quasi-smooth Calabi-Yau type detection") {
  CHECK(cy_type_quasismooth_hypersurface({1, 1, 1, 1, 2, 2}, 4) == 2);
  CHECK(cy_type_quasismooth_hypersurface({1, 4, 5, 6, 8, 8, 8, 8}, 16) == 2);
  CHECK(cy_type_quasismooth_hypersurface({1, 1, 1, 3, 3, 3}, 6) == 2);
  CHECK(cy_type_quasismooth_hypersurface({1, 1, 1, 1, 1, 1}, 3) == 2);
  // quartic fourfold: level 2 window but edge value 30, not of Calabi-Yau type
  CHECK_FALSE(cy_type_quasismooth_hypersurface({1, 1, 1, 1, 1, 1}, 4).has_value());
  CHECK_THROWS_AS(cy_type_quasismooth_hypersurface({1, 1, 1, 3}, 2), ValidationError);
}

TEST_CASE("consistency between level and type labels") {
  const char* families[] = {"P(1^6) : 3", "P(1^6,2) : 4", "P(1^8) : 2,3", "P(1^9) : 3"};
  for (const char* text : families) {
    const auto c = certified(text);
    const auto m = cy_type(c.family, c.report);
    REQUIRE(m.has_value());
    CHECK(hodge_level(c.family, c.report) == *m);
  }
  // Fano level never exceeds n - 2
  const char* more[] = {"P(1^5) : 4", "P(1^6) : 2,3", "P(1^4,3) : 6", "P(1^9) : 3"};
  for (const char* text : more) {
    const auto c = certified(text);
    const auto hh = hodge_level(c.family, c.report);
    REQUIRE(hh.has_value());
    CHECK(*hh <= c.family.dimension() - 2);
  }
}
