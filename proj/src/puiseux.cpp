#include "recip/puiseux.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "recip/errors.hpp"
#include "recip/ext.hpp"
#include "recip/factor.hpp"

namespace recip {
namespace {

// Sparse bivariate polynomial over K, keyed by (u-exponent, v-exponent).
template <class K>
using BMap = std::map<std::pair<long, long>, K>;

template <class K>
void badd(BMap<K>& m, long a, long b, const K& c) {
    if (is_zero(c)) return;
    auto it = m.find({a, b});
    if (it == m.end()) {
        m.emplace(std::pair<long, long>{a, b}, c);
    } else {
        it->second = it->second + c;
        if (is_zero(it->second)) m.erase(it);
    }
}

BMap<Rat> to_bmap(const BiPoly& g) {
    BMap<Rat> r;
    for (const auto& [e, c] : g.terms()) r[{e.first, e.second}] = c;
    return r;
}

// Edge of the lower-left hull, from (b1, a1) to (b2, a2) in
// (v-exp, u-exp) coordinates; b1 < b2, a1 > a2, slope q/e in lowest
// terms, and e*a + q*b = m on the edge.
struct RawEdge {
    long q = 0, e = 1, m = 0;
    long b1 = 0, a1 = 0, b2 = 0, a2 = 0;
};

template <class K>
std::vector<RawEdge> origin_edges(const BMap<K>& g) {
    std::map<long, long> min_a; // v-exp -> least u-exp
    for (const auto& [ex, c] : g) {
        auto it = min_a.find(ex.second);
        if (it == min_a.end() || ex.first < it->second) min_a[ex.second] = ex.first;
    }
    std::vector<std::pair<long, long>> hull; // (b, a), lower hull
    for (const auto& [b, a] : min_a) {
        const std::pair<long, long> p{b, a};
        while (hull.size() >= 2) {
            const auto& p1 = hull[hull.size() - 2];
            const auto& p2 = hull[hull.size() - 1];
            const long cr = (p2.first - p1.first) * (p.second - p1.second) -
                            (p2.second - p1.second) * (p.first - p1.first);
            if (cr <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<RawEdge> out;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const auto [b1, a1] = hull[i];
        const auto [b2, a2] = hull[i + 1];
        if (a2 >= a1) continue; // non-negative slope: no contact at the origin
        const long db = b2 - b1, da = a1 - a2;
        const long g2 = std::gcd(db, da);
        RawEdge ed;
        ed.q = da / g2;
        ed.e = db / g2;
        ed.b1 = b1;
        ed.a1 = a1;
        ed.b2 = b2;
        ed.a2 = a2;
        ed.m = ed.e * a1 + ed.q * b1;
        out.push_back(ed);
    }
    std::sort(out.begin(), out.end(),
              [](const RawEdge& x, const RawEdge& y) { return x.q * y.e < y.q * x.e; });
    return out;
}

// Characteristic polynomial of an edge in w = c^e: coefficient of
// w^((b - b1)/e) is the support coefficient at the edge point with
// v-exponent b.
template <class K>
UPoly<K> edge_char_poly(const BMap<K>& g, const RawEdge& ed) {
    UPoly<K> phi;
    phi.c.assign(static_cast<std::size_t>((ed.b2 - ed.b1) / ed.e + 1),
                 zero_like(g.begin()->second));
    for (const auto& [ex, c] : g) {
        const long a = ex.first, b = ex.second;
        if (b < ed.b1 || b > ed.b2) continue;
        if (ed.e * a + ed.q * b != ed.m) continue;
        phi.c[static_cast<std::size_t>((b - ed.b1) / ed.e)] = c;
    }
    phi.trim();
    return phi;
}

// ahat*e - bhat*q = 1 with ahat, bhat >= 0 (gcd(q, e) = 1).
std::pair<long, long> bezout_qe(long q, long e) {
    if (q == 1) return {1, e - 1};
    // ahat = e^{-1} mod q via extended Euclid
    long r0 = q, r1 = ((e % q) + q) % q;
    long t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long k = r0 / r1;
        std::tie(r0, r1) = std::pair<long, long>{r1, r0 - k * r1};
        std::tie(t0, t1) = std::pair<long, long>{t1, t0 - k * t1};
    }
    long ah = ((t0 % q) + q) % q;
    return {ah, (ah * e - 1) / q};
}

// g(w0^bhat u1^e, w0^ahat u1^q (1 + v1)) with the common power of u1
// stripped; a nonzero constant overall factor is deliberately not
// normalized away.
template <class K>
BMap<K> subst_edge(const BMap<K>& g, const K& w0, long ah, long bh, long q, long e) {
    const K one = one_like(g.begin()->second);
    long bmax = 0;
    for (const auto& [ex, c] : g) bmax = std::max(bmax, ex.second);
    std::vector<UPoly<K>> pw(static_cast<std::size_t>(bmax + 1)); // (1 + v1)^b
    pw[0] = UPoly<K>::constant(one);
    UPoly<K> z1;
    z1.c = {one, one};
    for (long b = 1; b <= bmax; ++b) pw[b] = pw[b - 1] * z1;

    BMap<K> r;
    for (const auto& [ex, c] : g) {
        const long a = ex.first, b = ex.second;
        const K w = c * w0.pow(bh * a + ah * b);
        const long ue = e * a + q * b;
        const auto& p = pw[static_cast<std::size_t>(b)];
        for (std::size_t j = 0; j < p.c.size(); ++j)
            badd(r, ue, static_cast<long>(j), p.c[j] * w);
    }
    long mmin = std::numeric_limits<long>::max();
    for (const auto& [ex, c] : r) mmin = std::min(mmin, ex.first);
    if (mmin > 0) {
        BMap<K> s;
        for (const auto& [ex, c] : r) s[{ex.first - mmin, ex.second}] = c;
        r = std::move(s);
    }
    return r;
}

// Order of g(0, v) at v = 0; requires a u-free term.
template <class K>
long ord_v_on_axis(const BMap<K>& g) {
    long o = std::numeric_limits<long>::max();
    for (const auto& [ex, c] : g)
        if (ex.first == 0) o = std::min(o, ex.second);
    return o;
}

// --- truncated power series over Q (low-first UPoly, mod t^n) ---

UPoly<Rat> ts_trunc(UPoly<Rat> p, long n) {
    if (static_cast<long>(p.c.size()) > n) {
        p.c.resize(static_cast<std::size_t>(std::max<long>(n, 0)));
        p.trim();
    }
    return p;
}

UPoly<Rat> ts_mul(const UPoly<Rat>& a, const UPoly<Rat>& b, long n) {
    if (a.zero() || b.zero()) return UPoly<Rat>{};
    UPoly<Rat> r;
    r.c.assign(static_cast<std::size_t>(
                   std::min<long>(n, static_cast<long>(a.c.size() + b.c.size()) - 1)),
               Rat());
    for (std::size_t i = 0; i < a.c.size() && static_cast<long>(i) < n; ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size() && static_cast<long>(i + j) < n; ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

// 1/a mod t^n (a(0) != 0), by Newton iteration.
UPoly<Rat> ts_inv(const UPoly<Rat>& a, long n) {
    UPoly<Rat> b = UPoly<Rat>::constant(a.c[0].inverse());
    const UPoly<Rat> two = UPoly<Rat>::constant(Rat(2));
    for (long prec = 1; prec < n;) {
        prec = std::min(2 * prec, n);
        b = ts_mul(b, two - ts_mul(a, b, prec), prec);
    }
    return b;
}

UPoly<Rat> ts_pow(const UPoly<Rat>& a, long k, long n) {
    UPoly<Rat> r = UPoly<Rat>::constant(Rat(1));
    UPoly<Rat> b = a;
    while (k > 0) {
        if (k & 1) r = ts_mul(r, b, n);
        b = ts_mul(b, b, n);
        k >>= 1;
    }
    return r;
}

// Sum of c_ab t^a s(t)^b mod t^n.
UPoly<Rat> eval_bmap_series(const BMap<Rat>& G, const UPoly<Rat>& s, long n) {
    long bmax = 0;
    for (const auto& [ex, c] : G) bmax = std::max(bmax, ex.second);
    std::vector<UPoly<Rat>> pw(static_cast<std::size_t>(bmax + 1));
    pw[0] = UPoly<Rat>::constant(Rat(1));
    for (long b = 1; b <= bmax; ++b) pw[b] = ts_mul(pw[b - 1], s, n);
    UPoly<Rat> r;
    for (const auto& [ex, c] : G) {
        const long a = ex.first, b = ex.second;
        if (a >= n) continue;
        r = r + shift_up(ts_trunc(pw[static_cast<std::size_t>(b)], n - a) * c,
                         static_cast<std::size_t>(a));
    }
    return ts_trunc(r, n);
}

BMap<Rat> deriv_v(const BMap<Rat>& G) {
    BMap<Rat> r;
    for (const auto& [ex, c] : G)
        if (ex.second > 0) r[{ex.first, ex.second - 1}] = c * Rat(ex.second);
    return r;
}

// Solve G(t, s(t)) = 0 mod t^(N+1) with s(0) = 0, given G(0,0) = 0 and
// a unit coefficient on u^0 v^1 (simple-root terminal form). Newton
// iteration with doubling precision.
UPoly<Rat> solve_series(const BMap<Rat>& G, long N) {
    const long n = N + 1;
    const BMap<Rat> Gv = deriv_v(G);
    UPoly<Rat> s;
    for (long prec = 1; prec < n;) {
        prec = std::min(2 * prec, n);
        const UPoly<Rat> val = eval_bmap_series(G, s, prec);
        if (val.zero()) continue;
        const UPoly<Rat> dv = eval_bmap_series(Gv, s, prec);
        s = ts_trunc(s - ts_mul(val, ts_inv(dv, prec), prec), prec);
    }
    return s;
}

struct ChainStep {
    Rat w0;
    long ahat = 0, bhat = 0, q = 0, e = 1;
};

// Back-substitute the recorded substitution chain around an innermost
// solution (u = t, v = inner_v).
RatParametrization compose_chain(const std::vector<ChainStep>& chain,
                                 const UPoly<Rat>& inner_v, long N) {
    Rat uc(1);
    long ue = 1;
    UPoly<Rat> v = ts_trunc(inner_v, N + 1);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const UPoly<Rat> onep = v + UPoly<Rat>::constant(Rat(1));
        const Rat cc = it->w0.pow(it->ahat) * uc.pow(it->q);
        v = ts_trunc(shift_up(onep, static_cast<std::size_t>(ue * it->q)) * cc, N + 1);
        uc = it->w0.pow(it->bhat) * uc.pow(it->e);
        ue *= it->e;
    }
    RatParametrization par;
    par.e = ue;
    par.u_coeff = uc;
    par.v_series = v;
    par.truncation = N;
    return par;
}

struct ExpandCtx {
    long budget = 0;
    long trunc = 0;
    int max_depth = 2;
    std::vector<PuiseuxBranchClass>* out = nullptr;
};

// After descending into a root of multiplicity k the new local equation
// must meet the v-axis with order exactly k; anything else means the
// squarefree/irreducible preconditions were violated.
template <class K>
void check_descent_order(const BMap<K>& g1, long mult) {
    if (ord_v_on_axis(g1) != mult) throw NotIrreducible();
}

template <class K>
void expand_rec(const BMap<K>& g_in, long e_acc, long d_acc,
                const std::vector<ChainStep>& chain, ExpandCtx& ctx) {
    BMap<K> g = g_in;
    if (g.empty()) throw AnalysisError("puiseux: local equation vanished");
    bool has_u_free = false;
    for (const auto& [ex, c] : g)
        if (ex.first == 0) {
            has_u_free = true;
            break;
        }
    if (!has_u_free) throw NotIrreducible();

    bool v_divides = true;
    for (const auto& [ex, c] : g)
        if (ex.second == 0) {
            v_divides = false;
            break;
        }
    if (v_divides) {
        // exact polynomial branch v = 0 at this level
        BMap<K> g2;
        for (const auto& [ex, c] : g) g2[{ex.first, ex.second - 1}] = c;
        for (const auto& [ex, c] : g2)
            if (ex.second < 0) throw AnalysisError("puiseux: internal exponent underflow");
        bool again = true;
        for (const auto& [ex, c] : g2)
            if (ex.second == 0) {
                again = false;
                break;
            }
        if (again) throw NotIrreducible(); // v^2 divides: repeated component
        std::optional<RatParametrization> par;
        if constexpr (std::is_same_v<K, Rat>) par = compose_chain(chain, UPoly<Rat>{}, ctx.trunc);
        ctx.out->push_back({e_acc, d_acc, par});
        g = std::move(g2);
    }
    if (g.count({0, 0})) return; // unit at the origin: no further branches

    for (const auto& ed : origin_edges(g)) {
        const UPoly<K> phi = edge_char_poly(g, ed);
        const auto [ah, bh] = bezout_qe(ed.q, ed.e);
        for (const auto& [fi, mult] : factor_uni<K>(phi)) {
            const long di = fi.degree();
            if (di < 1) continue;
            if (mult == 1) {
                if constexpr (std::is_same_v<K, Rat>) {
                    if (di == 1) {
                        const Rat w0 = -fi.c[0]; // fi monic
                        auto chain2 = chain;
                        chain2.push_back({w0, ah, bh, ed.q, ed.e});
                        const BMap<Rat> G = subst_edge(g, w0, ah, bh, ed.q, ed.e);
                        const UPoly<Rat> s = solve_series(G, ctx.trunc);
                        ctx.out->push_back(
                            {e_acc * ed.e, d_acc, compose_chain(chain2, s, ctx.trunc)});
                        continue;
                    }
                }
                ctx.out->push_back({e_acc * ed.e, d_acc * di, std::nullopt});
                continue;
            }
            // multiple root: substitute and recurse
            if (--ctx.budget < 0) throw NonTermination();
            if (di == 1) {
                const K w0 = -fi.c[0];
                const BMap<K> g1 = subst_edge(g, w0, ah, bh, ed.q, ed.e);
                check_descent_order(g1, mult);
                if constexpr (std::is_same_v<K, Rat>) {
                    auto chain2 = chain;
                    chain2.push_back({w0, ah, bh, ed.q, ed.e});
                    expand_rec<Rat>(g1, e_acc * ed.e, d_acc, chain2, ctx);
                } else {
                    expand_rec<K>(g1, e_acc * ed.e, d_acc, chain, ctx);
                }
            } else {
                if constexpr (tower_depth<K>::value >= 2) {
                    throw DepthExceeded();
                } else {
                    if (tower_depth<K>::value + 1 > ctx.max_depth) throw DepthExceeded();
                    auto F = std::make_shared<const ExtField<K>>(fi);
                    BMap<Ext<K>> ge;
                    for (const auto& [ex, c] : g) ge[ex] = Ext<K>::from_base(F, c);
                    const Ext<K> w0 = Ext<K>::generator(F);
                    const BMap<Ext<K>> g1 = subst_edge(ge, w0, ah, bh, ed.q, ed.e);
                    check_descent_order(g1, mult);
                    expand_rec<Ext<K>>(g1, e_acc * ed.e, d_acc * di, {}, ctx);
                }
            }
        }
    }
}

long default_truncation(long curve_degree) { return 2 * (curve_degree * curve_degree + 1); }

} // namespace

NewtonPolygon newton_polygon(const BiPoly& g) {
    if (g.zero()) throw AnalysisError("newton_polygon: zero polynomial");
    if (!g.coeff(0, 0).is_zero()) throw AnalysisError("newton_polygon: g(0,0) != 0");
    const BMap<Rat> m = to_bmap(g);
    bool has_u_free = false;
    for (const auto& [ex, c] : m)
        if (ex.first == 0) has_u_free = true;
    if (!has_u_free) throw AnalysisError("newton_polygon: g(0,v) vanishes identically");

    NewtonPolygon np;
    for (const auto& [ex, c] : m) np.support.push_back({ex.second, ex.first});
    std::sort(np.support.begin(), np.support.end());
    for (const auto& ed : origin_edges(m)) {
        NewtonEdge e;
        e.q = ed.q;
        e.e = ed.e;
        e.b1 = ed.b1;
        e.a1 = ed.a1;
        e.b2 = ed.b2;
        e.a2 = ed.a2;
        for (const auto& [ex, c] : m) {
            const long a = ex.first, b = ex.second;
            if (b >= ed.b1 && b <= ed.b2 && ed.e * a + ed.q * b == ed.m)
                e.lattice.push_back({b, a});
        }
        np.edges.push_back(std::move(e));
    }
    return np;
}

std::vector<PuiseuxBranchClass> branch_classes(const LocalChart& chart,
                                               const PuiseuxOptions& opt) {
    const BiPoly& g = chart.g;
    if (g.zero()) throw AnalysisError("branch_classes: zero local equation");
    if (!g.coeff(0, 0).is_zero())
        throw AnalysisError("branch_classes: chart center is not on the curve");
    if (g.degree_y() < 1) throw NotIrreducible();

    const UPoly<Rat> res = resultant_y(g, g.deriv_y());
    if (res.zero()) throw NotIrreducible(); // repeated factor in the local equation

    ExpandCtx ctx;
    ctx.budget = res.ord();
    ctx.trunc = opt.truncation > 0 ? opt.truncation : default_truncation(chart.curve_degree);
    ctx.max_depth = opt.max_tower_depth;
    std::vector<PuiseuxBranchClass> out;
    ctx.out = &out;
    const BMap<Rat> gm = to_bmap(g);
    expand_rec<Rat>(gm, 1, 1, {}, ctx);

    // degree accounting: sum e*d must match the intersection of the curve
    // with the u = 0 axis at the center
    long total = 0;
    for (const auto& cl : out) total += cl.ram_index * cl.residue_degree;
    if (total != ord_v_on_axis(gm)) throw NotIrreducible();

    std::stable_sort(out.begin(), out.end(),
                     [](const PuiseuxBranchClass& x, const PuiseuxBranchClass& y) {
                         if (x.ram_index != y.ram_index) return x.ram_index < y.ram_index;
                         return x.residue_degree < y.residue_degree;
                     });
    return out;
}

long places_over(const LocalChart& chart, const PuiseuxOptions& opt) {
    long n = 0;
    for (const auto& cl : branch_classes(chart, opt)) n += cl.residue_degree;
    return n;
}

PlaceAtInfinity unique_place(const AffinePlaneCurve& c, const LocalChart& chart,
                             const PuiseuxOptions& opt) {
    auto cls = branch_classes(chart, opt);
    if (cls.size() != 1 || cls[0].residue_degree != 1)
        throw AnalysisError("unique_place: chart does not carry a unique place");
    if (!cls[0].param)
        throw AnalysisError("unique_place: missing rational parametrization");
    PlaceAtInfinity p;
    p.chart = chart;
    p.branch = cls[0];
    p.curve_f = c.f;
    return p;
}

namespace {

// L(u(t), v(t)) mod t^n for a bivariate polynomial L.
UPoly<Rat> eval_bipoly_series(const BiPoly& L, const UPoly<Rat>& u, const UPoly<Rat>& v,
                              long n) {
    UPoly<Rat> r;
    for (const auto& [ex, c] : L.terms())
        r = r + ts_mul(ts_pow(u, ex.first, n), ts_pow(v, ex.second, n), n) * c;
    return ts_trunc(r, n);
}

} // namespace

Valuation valuation_with_leading(const PlaceAtInfinity& place, const BiPoly& h,
                                 long truncation) {
    if (h.zero()) throw ZeroFunction();
    if (bipoly_divides(place.curve_f, h)) throw ZeroFunction();

    const long dcur = place.chart.curve_degree;
    long base = truncation > 0 ? truncation : default_truncation(dcur);
    const long D = h.total_degree();

    for (int attempt = 0; attempt <= 10; ++attempt, base *= 2) {
        RatParametrization par;
        if (place.branch.param && place.branch.param->truncation >= base) {
            par = *place.branch.param;
        } else {
            PuiseuxOptions o;
            o.truncation = base;
            auto cls = branch_classes(place.chart, o);
            if (cls.size() != 1 || !cls[0].param)
                throw AnalysisError("valuation: place is not uniquely determined by its chart");
            par = *cls[0].param;
        }
        const long n = base + 1;
        UPoly<Rat> u;
        u.c.assign(static_cast<std::size_t>(par.e + 1), Rat());
        u.c[static_cast<std::size_t>(par.e)] = par.u_coeff;
        const UPoly<Rat> X0 = eval_bipoly_series(place.chart.X0, u, par.v_series, n);
        const UPoly<Rat> X1 = eval_bipoly_series(place.chart.X1, u, par.v_series, n);
        const UPoly<Rat> X2 = eval_bipoly_series(place.chart.X2, u, par.v_series, n);
        if (X0.zero()) throw AnalysisError("valuation: degenerate chart coordinate");
        const long o0 = X0.ord();

        UPoly<Rat> num;
        for (const auto& [ex, c] : h.terms()) {
            const long a = ex.first, b = ex.second;
            UPoly<Rat> t = ts_mul(ts_pow(X1, a, n), ts_pow(X2, b, n), n);
            t = ts_mul(t, ts_pow(X0, D - a - b, n), n);
            num = num + t * c;
        }
        num = ts_trunc(num, n);
        if (!num.zero() && num.ord() < base) {
            const long n0 = num.ord();
            Valuation val;
            val.v = n0 - D * o0;
            val.leading = num.c[static_cast<std::size_t>(n0)] / X0.c[static_cast<std::size_t>(o0)].pow(D);
            return val;
        }
        // order at or beyond the truncation bound: cancellation guard
    }
    throw PrecisionExhausted();
}

long valuation_at(const PlaceAtInfinity& place, const BiPoly& h, long truncation) {
    return valuation_with_leading(place, h, truncation).v;
}

} // namespace recip
