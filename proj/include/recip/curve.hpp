#ifndef RECIP_CURVE_HPP
#define RECIP_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "recip/bipoly.hpp"

namespace recip {

/// Projective point [x0 : x1 : x2] with x1/x0 = x, x2/x0 = y; the line at
/// infinity is x0 = 0. Normalized so the last nonzero coordinate is 1.
struct ProjPoint {
    Rat x0, x1, x2;

    static ProjPoint at_infinity(const Rat& a, const Rat& b) {
        ProjPoint p{Rat(0), a, b};
        p.normalize();
        return p;
    }
    void normalize() {
        Rat s = !x2.is_zero() ? x2 : (!x1.is_zero() ? x1 : x0);
        if (!s.is_zero()) {
            Rat i = s.inverse();
            x0 *= i;
            x1 *= i;
            x2 *= i;
        }
    }
    bool infinite() const { return x0.is_zero(); }
    std::string str() const {
        return "[" + x0.str() + ":" + x1.str() + ":" + x2.str() + "]";
    }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2;
    }
};

/// Validated plane affine curve V(f).
struct AffinePlaneCurve {
    BiPoly f;
    long degree = 0;
    BiPoly leading; // degree-d homogeneous part of f

    /// Validates: nonconstant and squarefree. Absolute irreducibility is a
    /// documented precondition checked only partially (see NotIrreducible
    /// consistency checks downstream).
    static AffinePlaneCurve create(const BiPoly& f);
};

/// One Galois conjugacy class of points of the curve at infinity.
struct InfinityPointClass {
    BiPoly factor;    // irreducible binary form in (x, y)
    long class_size;  // number of conjugate geometric points
    std::optional<ProjPoint> rational_point; // present iff class_size == 1
};

/// Affine chart of the projective closure with a chosen infinity point at
/// the origin. (x0, x1, x2) = (X0(u,v), X1(u,v), X2(u,v)), linear forms
/// over Q; g(u,v) is the local equation, g(0,0) = 0 and g(0,v) not
/// identically zero.
struct LocalChart {
    BiPoly g;
    BiPoly X0, X1, X2; // degree <= 1 in (u, v)
    ProjPoint center;
    long curve_degree = 0;
    long shear = 0; // u -> u + shear*v applied to the plain chart
};

/// Degree-d homogeneous part of f.
BiPoly leading_form(const BiPoly& f);

std::vector<InfinityPointClass> points_at_infinity(const AffinePlaneCurve& c);

/// Total number of geometric points at infinity (sum of class sizes).
long count_points_at_infinity(const AffinePlaneCurve& c);

LocalChart chart_at(const AffinePlaneCurve& c, ProjPoint p);

bool is_regular_at(const AffinePlaneCurve& c, ProjPoint p);

bool is_affine_smooth(const AffinePlaneCurve& c);

} // namespace recip

#endif
