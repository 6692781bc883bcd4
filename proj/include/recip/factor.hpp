#ifndef RECIP_FACTOR_HPP
#define RECIP_FACTOR_HPP

#include <utility>
#include <vector>

#include "recip/errors.hpp"
#include "recip/ext.hpp"
#include "recip/upoly.hpp"

namespace recip {

/// Complete factorization of a squarefree monic polynomial over Q into
/// monic irreducibles. Rational-root extraction plus degree-restricted
/// Kronecker splitting; modular degree patterns prune the search.
std::vector<UPoly<Rat>> factor_squarefree_q(const UPoly<Rat>& p);

// Deterministic ordering of field elements, used to canonicalize factor
// lists.
inline bool field_less(const Rat& a, const Rat& b) { return a < b; }
template <class K>
bool field_less(const Ext<K>& a, const Ext<K>& b) {
    const auto &ra = a.rep(), &rb = b.rep();
    if (ra.degree() != rb.degree()) return ra.degree() < rb.degree();
    for (long i = ra.degree(); i >= 0; --i) {
        const K ca = ra.c[i], cb = rb.c[i];
        if (!(ca == cb)) return field_less(ca, cb);
    }
    return false;
}

template <class K>
bool poly_less(const UPoly<K>& a, const UPoly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i)
        if (!(a.c[i] == b.c[i])) return field_less(a.c[i], b.c[i]);
    return false;
}

/// Yun squarefree decomposition (characteristic 0): returns the monic
/// squarefree cofactors with their multiplicities, product reconstructing
/// p up to the leading scalar.
template <class K>
std::vector<std::pair<UPoly<K>, long>> squarefree_decomposition(const UPoly<K>& p) {
    if (p.zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UPoly<K>, long>> out;
    UPoly<K> f = make_monic(p);
    if (f.degree() == 0) return out;
    UPoly<K> fp = derivative(f);
    UPoly<K> g = gcd_monic(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    UPoly<K> w = exact_div(f, g);
    UPoly<K> y = exact_div(fp, g);
    UPoly<K> z = y - derivative(w);
    long i = 1;
    while (w.degree() > 0) {
        UPoly<K> h = gcd_monic(w, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        w = exact_div(w, h);
        y = exact_div(z, h);
        z = y - derivative(w);
        ++i;
    }
    return out;
}

namespace detail {

/// Norm from K(alpha)[x] down to K[x]: Res_z(modulus(z), q with alpha -> z).
template <class K>
UPoly<K> ext_norm(const UPoly<Ext<K>>& q) {
    if (q.zero()) return UPoly<K>{};
    std::shared_ptr<const ExtField<K>> f;
    for (const auto& c : q.c)
        if (c.has_field()) {
            f = c.field();
            break;
        }
    if (!f) throw std::logic_error("ext_norm: no field context");
    const K one_k = one_like(f->modulus.lc());
    const UPoly<K> one_poly = UPoly<K>::constant(one_k);
    // A = modulus as a polynomial in z with constant (in x) coefficients.
    UPoly<UPoly<K>> a;
    for (const auto& c : f->modulus.c) a.c.push_back(UPoly<K>::constant(c));
    a.trim();
    // B = q with alpha replaced by z: coefficients gathered by z-power.
    UPoly<UPoly<K>> b;
    b.c.assign(static_cast<std::size_t>(f->degree()), UPoly<K>{});
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        const UPoly<K>& rep = q.c[i].rep();
        for (std::size_t j = 0; j < rep.c.size(); ++j) {
            if (is_zero(rep.c[j])) continue;
            UPoly<K>& slot = b.c[j];
            if (slot.c.size() <= i) slot.c.resize(i + 1, zero_like(one_k));
            slot.c[i] = slot.c[i] + rep.c[j];
        }
    }
    for (auto& slot : b.c) slot.trim();
    b.trim();
    return sylvester_resultant(a, b, one_poly);
}

template <class K>
std::vector<UPoly<K>> factor_squarefree_dispatch(const UPoly<K>& p);

template <>
inline std::vector<UPoly<Rat>> factor_squarefree_dispatch<Rat>(const UPoly<Rat>& p) {
    return factor_squarefree_q(p);
}

/// Trager's method: factor a squarefree monic polynomial over K(alpha) by
/// factoring a squarefree norm over K.
template <class K>
std::vector<UPoly<Ext<K>>> factor_squarefree_trager(const UPoly<Ext<K>>& p) {
    using E = Ext<K>;
    if (p.degree() <= 1) return {p};
    std::shared_ptr<const ExtField<K>> f;
    for (const auto& c : p.c)
        if (c.has_field()) {
            f = c.field();
            break;
        }
    if (!f) throw std::logic_error("trager: no field context");
    const E alpha = E::generator(f);
    const E one_e = one_like(alpha);

    for (long trial = 0;; ++trial) {
        // s = 0, 1, -1, 2, -2, ...
        long s = (trial + 1) / 2 * (trial % 2 ? 1 : -1);
        if (trial == 0) s = 0;
        E shift = alpha * E::from_base(f, [&] {
            K k = zero_like(f->modulus.lc());
            K onek = one_like(f->modulus.lc());
            for (long i = 0; i < (s < 0 ? -s : s); ++i) k = k + onek;
            return s < 0 ? -k : k;
        }());
        UPoly<E> ps = taylor_shift(p, -shift); // p(x - s*alpha)
        UPoly<K> n = ext_norm(ps);
        if (n.zero()) continue;
        UPoly<K> g = gcd_monic(n, derivative(n));
        if (g.degree() != 0) continue; // norm not squarefree; try another shift
        std::vector<UPoly<K>> nf = factor_squarefree_dispatch<K>(make_monic(n));
        std::vector<UPoly<E>> out;
        for (const auto& ni : nf) {
            UPoly<E> nie = embed_poly(f, ni);
            UPoly<E> fi = gcd_monic(ps, nie);
            if (fi.degree() < 1) continue;
            out.push_back(taylor_shift(fi, shift)); // undo x -> x - s*alpha
        }
        return out;
    }
}

template <>
inline std::vector<UPoly<Ext1>> factor_squarefree_dispatch<Ext1>(const UPoly<Ext1>& p) {
    return factor_squarefree_trager<Rat>(p);
}
template <>
inline std::vector<UPoly<Ext2>> factor_squarefree_dispatch<Ext2>(const UPoly<Ext2>& p) {
    return factor_squarefree_trager<Ext1>(p);
}
template <>
inline std::vector<UPoly<Ext3>> factor_squarefree_dispatch<Ext3>(const UPoly<Ext3>&) {
    throw DepthExceeded();
}

} // namespace detail

/// Complete factorization into monic irreducibles over the coefficient
/// field, with multiplicities; deterministic (degree, lex) ordering.
/// Towers deeper than 2 raise DepthExceeded.
template <class K>
std::vector<std::pair<UPoly<K>, long>> factor_uni(const UPoly<K>& p) {
    if constexpr (tower_depth<K>::value > 2) throw DepthExceeded();
    if (p.zero()) throw std::domain_error("factor_uni: zero polynomial");
    std::vector<std::pair<UPoly<K>, long>> out;
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        for (const auto& irr : detail::factor_squarefree_dispatch<K>(make_monic(part)))
            out.emplace_back(make_monic(irr), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return poly_less(a.first, b.first);
        return a.second < b.second;
    });
    return out;
}

} // namespace recip

#endif
