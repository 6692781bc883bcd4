#ifndef RECIP_UPOLY_HPP
#define RECIP_UPOLY_HPP

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "recip/rat.hpp"

namespace recip {

/// Dense univariate polynomial over a field K, lowest degree first.
/// No trailing zero coefficients; the zero polynomial has an empty
/// coefficient vector.
template <class K>
struct UPoly {
    std::vector<K> c;

    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static UPoly constant(const K& k) {
        UPoly p;
        if (!is_zero(k)) p.c.push_back(k);
        return p;
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    bool zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; } // -1 for zero
    const K& lc() const { return c.back(); }
    K coeff(std::size_t i) const {
        if (i < c.size()) return c[i];
        return c.empty() ? K() : zero_like(c.front());
    }
    /// Order of vanishing at 0. Degree+1 (i.e. "infinity") for the zero poly.
    long ord() const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!is_zero(c[i])) return static_cast<long>(i);
        return static_cast<long>(c.size());
    }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (std::size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }
};

// Ring hooks so UPoly<K> itself can serve as a coefficient ring
// (e.g. Sylvester matrices over K[x]).
template <class K>
bool is_zero(const UPoly<K>& a) {
    return a.zero();
}
template <class K>
UPoly<K> zero_like(const UPoly<K>&) {
    return UPoly<K>{};
}
template <class K>
UPoly<K> one_like(const UPoly<K>& a) {
    UPoly<K> r;
    r.c.push_back(a.c.empty() ? one_like(K()) : one_like(a.c[0]));
    return r;
}

template <class K>
UPoly<K> operator+(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    UPoly<K> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), zero_like(a.c[0]));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
}

template <class K>
UPoly<K> operator-(const UPoly<K>& a) {
    UPoly<K> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class K>
UPoly<K> operator-(const UPoly<K>& a, const UPoly<K>& b) {
    return a + (-b);
}

template <class K>
UPoly<K> operator*(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.zero() || b.zero()) return UPoly<K>{};
    UPoly<K> r;
    r.c.assign(a.c.size() + b.c.size() - 1, zero_like(a.c[0]));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

template <class K>
UPoly<K> operator*(const UPoly<K>& a, const K& s) {
    if (a.zero() || is_zero(s)) return UPoly<K>{};
    UPoly<K> r = a;
    for (auto& x : r.c) x = x * s;
    r.trim();
    return r;
}

/// Multiply by the monomial t^k.
template <class K>
UPoly<K> shift_up(const UPoly<K>& a, std::size_t k) {
    if (a.zero() || k == 0) return a;
    UPoly<K> r;
    r.c.assign(a.c.size() + k, zero_like(a.c[0]));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = a.c[i];
    return r;
}

template <class K>
UPoly<K> derivative(const UPoly<K>& a) {
    UPoly<K> r;
    if (a.c.size() <= 1) return r;
    r.c.reserve(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        K k = a.c[i];
        if (is_zero(k)) {
            r.c.push_back(zero_like(k));
            continue;
        }
        K m = zero_like(k);
        for (std::size_t j = 0; j < i; ++j) m = m + one_like(k); // i as a field element
        r.c.push_back(k * m);
    }
    r.trim();
    return r;
}

template <class K>
K eval(const UPoly<K>& a, const K& x) {
    K r = zero_like(x);
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = r * x + *it;
    return r;
}

/// Quotient and remainder of a by b over the field K. b must be nonzero.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(const UPoly<K>& a, const UPoly<K>& b) {
    if (b.zero()) throw std::domain_error("UPoly: division by zero polynomial");
    if (a.zero() || a.degree() < b.degree()) return {UPoly<K>{}, a};
    UPoly<K> r = a, q;
    const K lcb_inv = inv(b.lc());
    q.c.assign(a.c.size() - b.c.size() + 1, zero_like(a.c[0]));
    while (!r.zero() && r.degree() >= b.degree()) {
        const long d = r.degree() - b.degree();
        K f = r.lc() * lcb_inv;
        q.c[d] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            r.c[d + i] = r.c[d + i] - f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
UPoly<K> operator/(const UPoly<K>& a, const UPoly<K>& b) {
    return divmod(a, b).first;
}

template <class K>
UPoly<K> operator%(const UPoly<K>& a, const UPoly<K>& b) {
    return divmod(a, b).second;
}

template <class K>
UPoly<K> exact_div(const UPoly<K>& a, const UPoly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.zero()) throw std::logic_error("UPoly: exact_div with nonzero remainder");
    return q;
}

template <class K>
bool divides(const UPoly<K>& b, const UPoly<K>& a) {
    if (b.zero()) return a.zero();
    return divmod(a, b).second.zero();
}

template <class K>
UPoly<K> make_monic(const UPoly<K>& a) {
    if (a.zero()) return a;
    return a * inv(a.lc());
}

/// Monic greatest common divisor; gcd with zero is the other argument
/// made monic.
template <class K>
UPoly<K> gcd_monic(UPoly<K> a, UPoly<K> b) {
    while (!b.zero()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Extended gcd: returns (g, s, t) with g = s*a + t*b, g monic (or zero).
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> xgcd(UPoly<K> a, UPoly<K> b) {
    UPoly<K> one, s0, s1, t0, t1;
    if (!a.zero())
        one = UPoly<K>::constant(one_like(a.c[0]));
    else if (!b.zero())
        one = UPoly<K>::constant(one_like(b.c[0]));
    s0 = one;
    t1 = one;
    while (!b.zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.zero()) return {a, s0, t0};
    K u = inv(a.lc());
    return {a * u, s0 * u, t0 * u};
}

/// p / gcd(p, p'): monic product of the distinct irreducible factors.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
    if (p.zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return make_monic(p);
    UPoly<K> g = gcd_monic(p, derivative(p));
    return make_monic(exact_div(p, g));
}

/// Substitute x -> x + a.
template <class K>
UPoly<K> taylor_shift(const UPoly<K>& p, const K& a) {
    // Horner: p(x+a) built from the top coefficient down.
    UPoly<K> xp;                       // the polynomial  x + a
    if (p.zero()) return p;
    xp.c = {a, one_like(a)};
    xp.trim();
    UPoly<K> r;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        r = r * xp + UPoly<K>::constant(*it);
    return r;
}

template <class K>
UPoly<K> pow_ui(const UPoly<K>& p, unsigned long e) {
    UPoly<K> r, b = p;
    if (p.zero()) {
        if (e == 0) throw std::domain_error("pow_ui: 0^0 over unknown field");
        return p;
    }
    r = UPoly<K>::constant(one_like(p.c[0]));
    while (e > 0) {
        if (e & 1UL) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

/// Resultant of a and b over the field K, via the Euclidean remainder
/// sequence.
template <class K>
K resultant(UPoly<K> a, UPoly<K> b) {
    if (a.zero() || b.zero()) {
        K z = !a.zero() ? zero_like(a.c[0]) : (!b.zero() ? zero_like(b.c[0]) : K());
        return z;
    }
    K r = one_like(a.c[0]);
    bool neg = false;
    while (b.degree() > 0) {
        UPoly<K> rem = a % b;
        long da = a.degree(), db = b.degree(), dr = rem.zero() ? -1 : rem.degree();
        if ((da & 1) && (db & 1)) neg = !neg;
        if (rem.zero()) return zero_like(a.c[0]);
        K f = b.lc();
        K fp = one_like(f);
        for (long i = 0; i < da - dr; ++i) fp = fp * f;
        r = r * fp;
        a = std::move(b);
        b = std::move(rem);
    }
    // b is a nonzero constant
    K f = b.c[0];
    K fp = one_like(f);
    for (long i = 0; i < a.degree(); ++i) fp = fp * f;
    r = r * fp;
    if (neg) r = -r;
    return r;
}

} // namespace recip

#endif
