#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace recip;
using namespace testsupport;

namespace {
AffinePlaneCurve curve(const std::string& s) { return AffinePlaneCurve::create(parse_poly(s)); }
} // namespace

TEST_CASE("Fermat cubic: three points, Egyptian") {
    const auto v = classify(curve("x^3 + y^3 - 1"));
    CHECK(v.egyptian);
    CHECK(v.points_at_infinity == 3);
    CHECK(v.places_at_infinity >= 3);
    CHECK(!v.unique_point.has_value());
}

TEST_CASE("elliptic curve: unique regular point, not Egyptian") {
    const auto v = classify(curve("y^2 - x^3 + x"));
    CHECK(!v.egyptian);
    CHECK(v.points_at_infinity == 1);
    CHECK(v.places_at_infinity == 1);
    CHECK(v.places_exact);
    REQUIRE(v.unique_point.has_value());
    CHECK(*v.unique_point == ProjPoint::at_infinity(Rat(0), Rat(1)));
    REQUIRE(v.unique_point_regular.has_value());
    CHECK(*v.unique_point_regular);
}

TEST_CASE("cubic graph y = x^3: unique singular point, one place, not Egyptian") {
    const auto v = classify(curve("y - x^3"));
    CHECK(!v.egyptian);
    CHECK(v.points_at_infinity == 1);
    CHECK(v.places_at_infinity == 1);
    REQUIRE(v.unique_point.has_value());
    CHECK(*v.unique_point == ProjPoint::at_infinity(Rat(0), Rat(1)));
    CHECK(!*v.unique_point_regular);
}

TEST_CASE("x^3 - x*y - y: one singular point with two places, Egyptian") {
    const auto v = classify(curve("x^3 - x*y - y"));
    CHECK(v.egyptian);
    CHECK(v.points_at_infinity == 1);
    CHECK(v.places_at_infinity == 2);
    CHECK(v.places_exact);
    REQUIRE(v.unique_point.has_value());
    CHECK(!*v.unique_point_regular);
}

TEST_CASE("circle: two conjugate points, Egyptian") {
    const auto v = classify(curve("x^2 + y^2 - 1"));
    CHECK(v.egyptian);
    CHECK(v.points_at_infinity == 2);
    CHECK(v.places_at_infinity >= 2);
    CHECK(!v.unique_point.has_value());
}

TEST_CASE("remaining worked examples") {
    auto v = classify(curve("y^2 - x^5 - 1"));
    CHECK(!v.egyptian);
    CHECK(v.points_at_infinity == 1);
    CHECK(v.places_at_infinity == 1);
    CHECK(!*v.unique_point_regular);

    v = classify(curve("x^4 + y^3 + y"));
    CHECK(!v.egyptian);
    CHECK(v.points_at_infinity == 1);
    CHECK(*v.unique_point_regular);

    v = classify(curve("y - x"));
    CHECK(!v.egyptian);
    CHECK(v.points_at_infinity == 1);
    CHECK(v.places_at_infinity == 1);
}

TEST_CASE("integral closure report in the non-Egyptian case") {
    // Regular point: the local ring itself is the DVR.
    auto c = curve("y^2 - x^3 + x");
    auto v = classify(c);
    auto rep = integral_closure_report(c, v);
    CHECK(rep.point == *v.unique_point);
    CHECK(rep.point_regular);
    CHECK(rep.local_ring_is_dvr);
    CHECK(rep.recip_contained);
    CHECK(rep.place.ram_index == 3);

    // Singular point: the closure is the DVR of the unique place above it.
    c = curve("y - x^3");
    v = classify(c);
    rep = integral_closure_report(c, v);
    CHECK(!rep.point_regular);
    CHECK(!rep.local_ring_is_dvr);
    CHECK(rep.place.residue_degree == 1);

    // Egyptian curves have no such report.
    c = curve("x^3 + y^3 - 1");
    v = classify(c);
    CHECK_THROWS_AS(integral_closure_report(c, v), EgyptianError);
}

TEST_CASE("property: realization invariance under x -> x + c (>= 200 cases)") {
    auto res = prop_realization_invariance();
    INFO(res.first_failure);
    CHECK(res.cases >= 200);
    CHECK(res.failures == 0);
}
