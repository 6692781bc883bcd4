#include "recip/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace recip {
namespace {

// ---------------------------------------------------------------------
// Arithmetic mod a small prime, plugged into the generic UPoly machinery
// for factor-degree pattern computation.
// ---------------------------------------------------------------------
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0; // 0 = context-free zero

    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t p = a.p ? a.p : b.p;
        return {p ? (a.v + b.v) % p : 0, p};
    }
    friend Fp operator-(Fp a, Fp b) {
        std::uint64_t p = a.p ? a.p : b.p;
        return {p ? (a.v + p - b.v % p) % p : 0, p};
    }
    Fp operator-() const { return {p ? (p - v) % p : 0, p}; }
    friend Fp operator*(Fp a, Fp b) {
        std::uint64_t p = a.p ? a.p : b.p;
        return {p ? (a.v * b.v) % p : 0, p};
    }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
};
Fp zero_like(Fp a) { return {0, a.p}; }
Fp one_like(Fp a) { return {1 % a.p, a.p}; }
bool is_zero(Fp a) { return a.v == 0; }
Fp inv(Fp a) {
    // Fermat inverse
    std::uint64_t r = 1, b = a.v, e = a.p - 2;
    while (e) {
        if (e & 1) r = r * b % a.p;
        b = b * b % a.p;
        e >>= 1;
    }
    return {r, a.p};
}

/// Degrees (with multiplicity) of the irreducible factors of f mod p,
/// or empty if f mod p is degenerate (drops degree / not squarefree).
std::vector<long> degree_pattern(const UPoly<Rat>& f, std::uint64_t p) {
    UPoly<Fp> g;
    for (const auto& r : f.c) {
        mpz_class n = r.num() % static_cast<long>(p);
        mpz_class d = r.den() % static_cast<long>(p);
        if (d == 0) return {};
        std::uint64_t nn = ((n.get_si() % (long)p) + (long)p) % p;
        std::uint64_t dd = ((d.get_si() % (long)p) + (long)p) % p;
        g.c.push_back(Fp{nn, p} * inv(Fp{dd, p}));
    }
    g.trim();
    if (g.degree() != f.degree()) return {};
    if (gcd_monic(g, derivative(g)).degree() != 0) return {};
    g = make_monic(g);
    std::vector<long> degs;
    UPoly<Fp> x;
    x.c = {Fp{0, p}, Fp{1, p}};
    long i = 1;
    UPoly<Fp> rem = g;
    UPoly<Fp> fr = x; // x^(p^(i-1)) mod rem
    while (rem.degree() >= 2 * i) {
        // fr <- fr^p mod rem
        UPoly<Fp> acc = UPoly<Fp>::constant(Fp{1, p});
        UPoly<Fp> base = fr % rem;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) acc = (acc * base) % rem;
            base = (base * base) % rem;
            e >>= 1;
        }
        fr = acc;
        UPoly<Fp> gi = gcd_monic(fr - x, rem);
        if (gi.degree() > 0) {
            for (long k = 0; k < gi.degree() / i; ++k) degs.push_back(i);
            rem = exact_div(rem, gi);
        }
        ++i;
    }
    if (rem.degree() > 0) degs.push_back(rem.degree());
    return degs;
}

std::set<long> subset_sums(const std::vector<long>& degs) {
    std::set<long> s{0};
    for (long d : degs) {
        std::set<long> nxt = s;
        for (long x : s) nxt.insert(x + d);
        s = std::move(nxt);
    }
    return s;
}

// ---------------------------------------------------------------------
// Integer-polynomial helpers for rational roots and Kronecker splitting.
// ---------------------------------------------------------------------

/// Scale a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient (content removed).
std::vector<mpz_class> to_primitive_int(const UPoly<Rat>& p) {
    mpz_class l = 1;
    for (const auto& r : p.c) l = lcm(l, r.den());
    std::vector<mpz_class> z;
    z.reserve(p.c.size());
    for (const auto& r : p.c) z.push_back(r.num() * (l / r.den()));
    mpz_class g = 0;
    for (const auto& v : z) g = gcd(g, v);
    if (g != 0)
        for (auto& v : z) v /= g;
    if (!z.empty() && z.back() < 0)
        for (auto& v : z) v = -v;
    return z;
}

UPoly<Rat> from_int(const std::vector<mpz_class>& z) {
    UPoly<Rat> p;
    for (const auto& v : z) p.c.emplace_back(v);
    p.trim();
    return p;
}

mpz_class eval_int(const std::vector<mpz_class>& z, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) r = r * x + *it;
    return r;
}

/// All positive divisors by trial division. Desk-scale values only.
std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Monic linear factors x - r for every rational root r; p is divided down.
std::vector<UPoly<Rat>> extract_rational_roots(UPoly<Rat>& p) {
    std::vector<UPoly<Rat>> out;
    // roots at zero
    while (!p.zero() && p.c.size() > 1 && p.c[0].is_zero()) {
        UPoly<Rat> x;
        x.c = {Rat(0), Rat(1)};
        out.push_back(x);
        p.c.erase(p.c.begin());
    }
    if (p.degree() < 1) return out;
    auto z = to_primitive_int(p);
    auto nums = positive_divisors(z.front());
    auto dens = positive_divisors(z.back());
    std::vector<Rat> roots;
    for (const auto& pn : nums)
        for (const auto& qd : dens)
            for (int sign : {1, -1}) {
                Rat cand(sign > 0 ? pn : mpz_class(-pn), qd);
                if (eval(p, cand).is_zero()) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const auto& r : roots) {
        UPoly<Rat> lin;
        lin.c = {-r, Rat(1)};
        p = exact_div(p, lin); // squarefree input: each root once
        out.push_back(lin);
    }
    return out;
}

/// Lagrange interpolation through (xs[i], ys[i]); rational result.
UPoly<Rat> lagrange(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
    UPoly<Rat> acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly<Rat> li = UPoly<Rat>::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            UPoly<Rat> lin;
            lin.c = {Rat(mpz_class(-xs[j])), Rat(1)};
            li = li * lin;
            denom *= Rat(mpz_class(xs[i] - xs[j]));
        }
        acc = acc + li * (Rat(ys[i]) / denom);
    }
    return acc;
}

bool is_integer_poly(const UPoly<Rat>& p) {
    for (const auto& c : p.c)
        if (!c.is_integer()) return false;
    return true;
}

/// Kronecker splitting restricted to candidate factor degrees. Returns a
/// proper monic factor, or an empty poly when p is irreducible.
UPoly<Rat> kronecker_split(const UPoly<Rat>& p, const std::set<long>& degrees) {
    const long n = p.degree();
    auto z = to_primitive_int(p);
    // Evaluation points with small values first; need up to n/2 + 1.
    struct Pt {
        mpz_class x, val;
    };
    std::vector<Pt> pts;
    for (long i = 0; pts.size() < static_cast<std::size_t>(n / 2 + 3); ++i) {
        long xv = (i + 1) / 2 * (i % 2 ? 1 : -1);
        mpz_class x(xv);
        mpz_class v = eval_int(z, x);
        if (v == 0) continue; // cannot happen after root extraction, but be safe
        pts.push_back({x, v});
    }
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        return abs(a.val) < abs(b.val);
    });

    for (long k = 2; k <= n / 2; ++k) {
        if (!degrees.count(k)) continue;
        std::vector<mpz_class> xs;
        std::vector<std::vector<mpz_class>> divs;
        for (long i = 0; i <= k; ++i) {
            xs.push_back(pts[i].x);
            auto d = positive_divisors(pts[i].val);
            std::vector<mpz_class> signed_divs;
            for (const auto& v : d) {
                signed_divs.push_back(v);
                if (i > 0) signed_divs.push_back(-v); // fix sign of the first value
            }
            divs.push_back(std::move(signed_divs));
        }
        std::vector<std::size_t> idx(k + 1, 0);
        while (true) {
            std::vector<mpz_class> ys;
            for (long i = 0; i <= k; ++i) ys.push_back(divs[i][idx[i]]);
            UPoly<Rat> g = lagrange(xs, ys);
            if (g.degree() == k && is_integer_poly(g) && divides(g, p)) return make_monic(g);
            // odometer
            long pos = k;
            while (pos >= 0) {
                if (++idx[pos] < divs[pos].size()) break;
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return UPoly<Rat>{};
}

} // namespace

std::vector<UPoly<Rat>> factor_squarefree_q(const UPoly<Rat>& p_in) {
    UPoly<Rat> p = make_monic(p_in);
    std::vector<UPoly<Rat>> out;
    if (p.degree() < 1) return out;
    auto linear = extract_rational_roots(p);
    out.insert(out.end(), linear.begin(), linear.end());
    p = make_monic(p);
    const long n = p.degree();
    if (n <= 0) return out;
    if (n <= 3) {
        // no rational roots left, degree <= 3: irreducible over Q
        out.push_back(p);
        return out;
    }
    // Modular degree patterns: possible degrees of factors over Q.
    static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    std::set<long> possible;
    for (long d = 0; d <= n; ++d) possible.insert(d);
    int used = 0;
    for (std::uint64_t q : primes) {
        auto degs = degree_pattern(p, q);
        if (degs.empty()) continue;
        auto sums = subset_sums(degs);
        std::set<long> inter;
        for (long d : possible)
            if (sums.count(d)) inter.insert(d);
        possible = std::move(inter);
        if (++used >= 4) break;
    }
    bool splittable = false;
    for (long k = 2; k <= n / 2; ++k)
        if (possible.count(k) && possible.count(n - k)) splittable = true;
    if (!splittable) {
        out.push_back(p);
        return out;
    }
    UPoly<Rat> g = kronecker_split(p, possible);
    if (g.zero()) {
        out.push_back(p);
        return out;
    }
    auto left = factor_squarefree_q(g);
    auto right = factor_squarefree_q(exact_div(p, g));
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

} // namespace recip
