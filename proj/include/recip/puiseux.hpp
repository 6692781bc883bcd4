#ifndef RECIP_PUISEUX_HPP
#define RECIP_PUISEUX_HPP

#include <optional>
#include <vector>

#include "recip/curve.hpp"
#include "recip/upoly.hpp"

namespace recip {

struct PuiseuxOptions {
    long truncation = 0;   // 0 = derive from the curve degree: 2*(d^2+1)
    int max_tower_depth = 2;
};

struct NewtonEdge {
    long q = 0, e = 1; // slope q/e in lowest terms (u-exponent gain per v-exponent drop)
    // endpoints in (v-exp, u-exp) coordinates, b1 < b2
    long b1 = 0, a1 = 0, b2 = 0, a2 = 0;
    std::vector<std::pair<long, long>> lattice; // support points on the edge, (v-exp, u-exp)
};

/// Lower hull of the exponent support of a local equation. Support points
/// are (i, j) = (exponent of v, exponent of u); edges sorted by
/// increasing slope.
struct NewtonPolygon {
    std::vector<std::pair<long, long>> support;
    std::vector<NewtonEdge> edges;
};

NewtonPolygon newton_polygon(const BiPoly& g);

/// Truncated rational parametrization of a branch:
///   u = u_coeff * t^e,   v = v_series(t),
/// with g(u(t), v(t)) = O(t^(truncation+1)).
struct RatParametrization {
    long e = 1;
    Rat u_coeff;
    UPoly<Rat> v_series;
    long truncation = 0;
};

/// One conjugacy class of branches over the chart origin. The class
/// stands for residue_degree conjugate points of the normalization.
/// A truncated parametrization is recorded when the branch data stays
/// rational.
struct PuiseuxBranchClass {
    long ram_index = 1;      // e
    long residue_degree = 1; // d
    std::optional<RatParametrization> param;
};

std::vector<PuiseuxBranchClass> branch_classes(const LocalChart& chart,
                                               const PuiseuxOptions& opt = {});

/// Number of normalization preimages over the chart center:
/// sum of residue degrees.
long places_over(const LocalChart& chart, const PuiseuxOptions& opt = {});

/// A place at infinity: a branch with the valuation normalized so that
/// v(t) = +1; pole order of h is -v(h).
struct PlaceAtInfinity {
    LocalChart chart;
    PuiseuxBranchClass branch;
    BiPoly curve_f;
};

/// The unique place over a chart known to carry exactly one place.
PlaceAtInfinity unique_place(const AffinePlaneCurve& c, const LocalChart& chart,
                             const PuiseuxOptions& opt = {});

/// v(h) at the place; also returns the leading series coefficient.
struct Valuation {
    long v = 0;
    Rat leading;
};
Valuation valuation_with_leading(const PlaceAtInfinity& place, const BiPoly& h,
                                 long truncation = 0);
long valuation_at(const PlaceAtInfinity& place, const BiPoly& h, long truncation = 0);

} // namespace recip

#endif
