#include "recip/curve.hpp"

#include <stdexcept>

#include "recip/errors.hpp"
#include "recip/ext.hpp"
#include "recip/factor.hpp"

namespace recip {

BiPoly leading_form(const BiPoly& f) {
    if (f.is_constant()) throw InputError("leading_form: constant polynomial");
    return f.leading_form();
}

AffinePlaneCurve AffinePlaneCurve::create(const BiPoly& f) {
    if (f.is_constant()) throw InputError("constant polynomial does not define a curve");
    // squarefreeness
    if (f.degree_y() >= 1) {
        auto coeffs = f.by_y();
        UPoly<Rat> content;
        for (const auto& c : coeffs) content = gcd_monic(content, c);
        if (content.degree() > 0 &&
            gcd_monic(content, derivative(content)).degree() > 0)
            throw InputError("polynomial is not squarefree");
        std::vector<UPoly<Rat>> pp = coeffs;
        if (content.degree() > 0)
            for (auto& c : pp) c = c.zero() ? c : exact_div(c, content);
        BiPoly primitive = BiPoly::from_by_y(pp);
        if (primitive.degree_y() >= 1) {
            UPoly<Rat> r = resultant_y(primitive, primitive.deriv_y());
            if (r.zero()) throw InputError("polynomial is not squarefree");
        }
    } else {
        auto cx = f.by_y()[0];
        if (gcd_monic(cx, derivative(cx)).degree() > 0)
            throw InputError("polynomial is not squarefree");
    }
    AffinePlaneCurve c;
    c.f = f;
    c.degree = f.total_degree();
    c.leading = f.leading_form();
    return c;
}

std::vector<InfinityPointClass> points_at_infinity(const AffinePlaneCurve& c) {
    const long d = c.degree;
    // L(s, 1): roots s = x/y give points [0 : s : 1]; the point [0:1:0]
    // appears iff the x^d coefficient of the leading form vanishes.
    UPoly<Rat> u;
    for (const auto& [e, co] : c.leading.terms()) {
        if (u.c.size() <= static_cast<std::size_t>(e.first)) u.c.resize(e.first + 1, Rat());
        u.c[e.first] = co;
    }
    u.trim();
    std::vector<InfinityPointClass> out;
    if (u.degree() >= 1) {
        UPoly<Rat> sf = squarefree_part(u);
        for (const auto& [irr, mult] : factor_uni(sf)) {
            InfinityPointClass cls;
            cls.class_size = irr.degree();
            // binary form: y^k * irr(x/y)
            const long k = irr.degree();
            for (long i = 0; i <= k; ++i) cls.factor.add_term(i, k - i, irr.coeff(i));
            if (k == 1) cls.rational_point = ProjPoint::at_infinity(-irr.c[0], Rat(1));
            out.push_back(std::move(cls));
        }
    }
    if (u.degree() < d) {
        InfinityPointClass cls;
        cls.factor = BiPoly::var_y();
        cls.class_size = 1;
        cls.rational_point = ProjPoint::at_infinity(Rat(1), Rat(0));
        out.push_back(std::move(cls));
    }
    return out;
}

long count_points_at_infinity(const AffinePlaneCurve& c) {
    long n = 0;
    for (const auto& cls : points_at_infinity(c)) n += cls.class_size;
    return n;
}

namespace {

/// Value of the homogenization of f on three degree<=1 forms in (u, v).
BiPoly dehomogenize_on(const BiPoly& f, long d, const BiPoly& X0, const BiPoly& X1,
                       const BiPoly& X2) {
    BiPoly g;
    for (const auto& [e, co] : f.terms()) {
        BiPoly t = X1.pow(e.first) * X2.pow(e.second) * X0.pow(d - e.first - e.second);
        g = g + t * co;
    }
    return g;
}

bool on_curve_at_infinity(const AffinePlaneCurve& c, const ProjPoint& p) {
    if (!p.infinite()) return false;
    return c.leading.eval(p.x1, p.x2).is_zero();
}

/// g(0, v) as a univariate polynomial.
UPoly<Rat> at_u_zero(const BiPoly& g) {
    UPoly<Rat> r;
    for (const auto& [e, co] : g.terms()) {
        if (e.first != 0) continue;
        if (r.c.size() <= static_cast<std::size_t>(e.second)) r.c.resize(e.second + 1, Rat());
        r.c[e.second] = co;
    }
    r.trim();
    return r;
}

} // namespace

LocalChart chart_at(const AffinePlaneCurve& c, ProjPoint p) {
    p.normalize();
    if (!on_curve_at_infinity(c, p))
        throw InputError("point is not on the curve at infinity: " + p.str());
    const long d = c.degree;
    const BiPoly u = BiPoly::var_x(), v = BiPoly::var_y();
    // Base chart: u is the x0 coordinate, v the remaining one, translated
    // so p sits at the origin.
    BiPoly X0b, X1b, X2b;
    if (!p.x2.is_zero()) {
        // p = [0 : a : 1], chart x2 = 1
        X0b = u;
        X1b = v + BiPoly::constant(p.x1);
        X2b = BiPoly::constant(Rat(1));
    } else {
        // p = [0 : 1 : 0], chart x1 = 1
        X0b = u;
        X1b = BiPoly::constant(Rat(1));
        X2b = v;
    }
    for (long trial = 0;; ++trial) {
        long t = (trial + 1) / 2 * (trial % 2 ? 1 : -1);
        BiPoly ush = u + v * Rat(t); // u -> u + t*v
        BiPoly X0 = X0b.compose(ush, v), X1 = X1b.compose(ush, v), X2 = X2b.compose(ush, v);
        BiPoly g = dehomogenize_on(c.f, d, X0, X1, X2);
        if (!g.coeff(0, 0).is_zero())
            throw NotIrreducible(); // chart must vanish at the origin
        if (!at_u_zero(g).zero()) {
            LocalChart ch;
            ch.g = std::move(g);
            ch.X0 = std::move(X0);
            ch.X1 = std::move(X1);
            ch.X2 = std::move(X2);
            ch.center = p;
            ch.curve_degree = d;
            ch.shear = t;
            return ch;
        }
        if (trial > 2 * d + 2) throw NotIrreducible(); // cannot happen for squarefree f
    }
}

bool is_regular_at(const AffinePlaneCurve& c, ProjPoint p) {
    p.normalize();
    if (!on_curve_at_infinity(c, p))
        throw InputError("point is not on the curve at infinity: " + p.str());
    // partials of the homogenization F at [0 : x1 : x2]:
    //   F_x1 = L_x, F_x2 = L_y, F_x0 = (degree d-1 part of f).
    const Rat a = p.x1, b = p.x2;
    if (!c.leading.deriv_x().eval(a, b).is_zero()) return true;
    if (!c.leading.deriv_y().eval(a, b).is_zero()) return true;
    BiPoly fd1;
    for (const auto& [e, co] : c.f.terms())
        if (e.first + e.second == c.degree - 1) fd1.add_term(e.first, e.second, co);
    return !fd1.eval(a, b).is_zero();
}

namespace {

/// f(alpha, y) over Q[alpha]/(m) as a univariate polynomial in y.
UPoly<Ext1> eval_x_at_ext(const BiPoly& f, const std::shared_ptr<const ExtField<Rat>>& fld) {
    Ext1 alpha = Ext1::generator(fld);
    long dx = std::max<long>(f.degree_x(), 0);
    std::vector<Ext1> apow(dx + 1);
    apow[0] = one_like(alpha);
    for (long i = 1; i <= dx; ++i) apow[i] = apow[i - 1] * alpha;
    UPoly<Ext1> r;
    for (const auto& [e, co] : f.terms()) {
        if (r.c.size() <= static_cast<std::size_t>(e.second))
            r.c.resize(e.second + 1, zero_like(alpha));
        r.c[e.second] = r.c[e.second] + apow[e.first] * Ext1::from_base(fld, co);
    }
    r.trim();
    return r;
}

UPoly<Rat> eval_x_at_rat(const BiPoly& f, const Rat& x0) {
    UPoly<Rat> r;
    for (const auto& [e, co] : f.terms()) {
        if (r.c.size() <= static_cast<std::size_t>(e.second)) r.c.resize(e.second + 1, Rat());
        r.c[e.second] += co * x0.pow(e.first);
    }
    r.trim();
    return r;
}

} // namespace

bool is_affine_smooth(const AffinePlaneCurve& c) {
    const BiPoly fx = c.f.deriv_x(), fy = c.f.deriv_y();
    // A squarefree polynomial in one variable only defines a smooth locus.
    if (fx.zero() || fy.zero()) return true;
    if (c.f.degree_y() == 0 || c.f.degree_x() == 0) return true;
    UPoly<Rat> r1 = resultant_y(c.f, fx);
    UPoly<Rat> r2 = resultant_y(c.f, fy);
    UPoly<Rat> g;
    if (!r1.zero() && !r2.zero())
        g = gcd_monic(r1, r2);
    else if (!r2.zero())
        g = make_monic(r2);
    else if (!r1.zero())
        g = make_monic(r1);
    else
        throw NotIrreducible(); // both eliminations degenerate
    if (g.degree() == 0) return true;
    for (const auto& [m, mult] : factor_uni(squarefree_part(g))) {
        if (m.degree() == 1) {
            Rat x0 = -m.c[0];
            UPoly<Rat> a = eval_x_at_rat(c.f, x0);
            UPoly<Rat> b = eval_x_at_rat(fx, x0);
            UPoly<Rat> d = eval_x_at_rat(fy, x0);
            UPoly<Rat> cg = gcd_monic(gcd_monic(a, b), d);
            if (cg.degree() > 0) return false;
            if (cg.zero()) return false; // all three vanish identically at x0
        } else {
            auto fld = std::make_shared<const ExtField<Rat>>(m);
            UPoly<Ext1> a = eval_x_at_ext(c.f, fld);
            UPoly<Ext1> b = eval_x_at_ext(fx, fld);
            UPoly<Ext1> d = eval_x_at_ext(fy, fld);
            UPoly<Ext1> cg = gcd_monic(gcd_monic(a, b), d);
            if (cg.degree() > 0) return false;
            if (cg.zero()) return false;
        }
    }
    return true;
}

} // namespace recip
