#include "recip/bipoly.hpp"

#include <stdexcept>

#include "recip/ext.hpp"

namespace recip {

BiPoly BiPoly::subst_x_shift(const Rat& c) const {
    return compose(var_x() + constant(c), var_y());
}

BiPoly BiPoly::compose(const BiPoly& p, const BiPoly& q) const {
    // cache powers
    long dx = std::max<long>(degree_x(), 0), dy = std::max<long>(degree_y(), 0);
    std::vector<BiPoly> px(dx + 1), qy(dy + 1);
    px[0] = constant(Rat(1));
    for (long i = 1; i <= dx; ++i) px[i] = px[i - 1] * p;
    qy[0] = constant(Rat(1));
    for (long i = 1; i <= dy; ++i) qy[i] = qy[i - 1] * q;
    BiPoly r;
    for (const auto& [e, c] : t_) r = r + px[e.first] * qy[e.second] * c;
    return r;
}

static UPoly<Rat> resultant_generic(std::vector<UPoly<Rat>> a, std::vector<UPoly<Rat>> b) {
    UPoly<UPoly<Rat>> pa, pb;
    pa.c = std::move(a);
    pa.trim();
    pb.c = std::move(b);
    pb.trim();
    if (pa.degree() < 1 && pb.degree() < 1)
        throw std::domain_error("resultant: both inputs constant in the eliminated variable");
    if (pa.zero() || pb.zero()) return UPoly<Rat>{};
    return sylvester_resultant(pa, pb, UPoly<Rat>::constant(Rat(1)));
}

UPoly<Rat> resultant_y(const BiPoly& p, const BiPoly& q) {
    if (p.zero() || q.zero()) throw std::domain_error("resultant_y: zero input");
    return resultant_generic(p.by_y(), q.by_y());
}

UPoly<Rat> resultant_x(const BiPoly& p, const BiPoly& q) {
    if (p.zero() || q.zero()) throw std::domain_error("resultant_x: zero input");
    return resultant_generic(p.by_x(), q.by_x());
}

bool bipoly_divides(const BiPoly& f, const BiPoly& h) {
    if (h.zero()) return true;
    if (f.zero()) return false;
    if (f.degree_y() > 0) {
        // pseudo-division by f as a polynomial in y over Q[x]
        auto fy = f.by_y();
        auto hy = h.by_y();
        UPoly<UPoly<Rat>> F, H;
        F.c = fy;
        F.trim();
        H.c = hy;
        H.trim();
        const UPoly<Rat> lc = F.lc();
        while (!H.zero() && H.degree() >= F.degree()) {
            long d = H.degree() - F.degree();
            UPoly<Rat> top = H.lc();
            // H = H*lc - top * y^d * F
            UPoly<UPoly<Rat>> scaledH;
            scaledH.c.reserve(H.c.size());
            for (const auto& c : H.c) scaledH.c.push_back(c * lc);
            scaledH.trim();
            UPoly<UPoly<Rat>> sub;
            sub.c.assign(F.c.size() + d, UPoly<Rat>{});
            for (std::size_t i = 0; i < F.c.size(); ++i) sub.c[i + d] = F.c[i] * top;
            sub.trim();
            H = scaledH - sub;
        }
        if (!H.zero()) return false;
        // pseudo-remainder zero: lc^k * h = q * f. For squarefree respectively
        // primitive usage this certifies divisibility of h by the y-primitive
        // part of f; check the x-content too.
        auto fx = f.by_y();
        UPoly<Rat> content;
        for (const auto& c : fx) content = gcd_monic(content, c);
        if (content.degree() == 0) return true;
        // f has an x-only content; it must divide every y-coefficient of h.
        for (const auto& c : h.by_y())
            if (!divides(content, c)) return false;
        return true;
    }
    // f constant in y: univariate in x; must divide every y-coefficient of h
    auto fx = f.by_y()[0];
    for (const auto& c : h.by_y())
        if (!divides(fx, c)) return false;
    return true;
}

} // namespace recip
