#ifndef RECIP_EXT_HPP
#define RECIP_EXT_HPP

#include <memory>
#include <stdexcept>
#include <tuple>

#include "recip/errors.hpp"
#include "recip/upoly.hpp"

namespace recip {

/// A simple algebraic extension K[z]/(modulus), modulus monic irreducible.
/// Shared between all elements of the same field.
template <class K>
struct ExtField {
    UPoly<K> modulus;
    explicit ExtField(UPoly<K> m) : modulus(std::move(m)) {
        if (modulus.degree() < 1) throw std::domain_error("ExtField: modulus must be nonconstant");
        if (!(modulus.lc() == one_like(modulus.lc())))
            throw std::domain_error("ExtField: modulus must be monic");
    }
    long degree() const { return modulus.degree(); }
};

/// Element of an extension field; rep has degree < deg(modulus).
/// A default-constructed Ext is the zero of an unspecified field and is
/// promoted on first use against a field-carrying operand.
template <class K>
class Ext {
  public:
    Ext() = default;
    Ext(std::shared_ptr<const ExtField<K>> f, UPoly<K> rep) : f_(std::move(f)) {
        if (!f_) {
            if (!rep.zero()) throw std::logic_error("Ext: nonzero element without a field");
            return;
        }
        rep_ = rep % f_->modulus;
    }
    static Ext from_base(std::shared_ptr<const ExtField<K>> f, const K& k) {
        return Ext(std::move(f), UPoly<K>::constant(k));
    }
    /// The adjoined generator z.
    static Ext generator(std::shared_ptr<const ExtField<K>> f) {
        UPoly<K> z;
        z.c = {zero_like(f->modulus.lc()), one_like(f->modulus.lc())};
        return Ext(std::move(f), std::move(z));
    }

    const std::shared_ptr<const ExtField<K>>& field() const { return f_; }
    const UPoly<K>& rep() const { return rep_; }
    bool zero() const { return rep_.zero(); }
    bool has_field() const { return f_ != nullptr; }

    friend Ext operator+(const Ext& a, const Ext& b) {
        auto f = merge(a, b);
        return Ext(f, a.rep_ + b.rep_);
    }
    friend Ext operator-(const Ext& a, const Ext& b) {
        auto f = merge(a, b);
        return Ext(f, a.rep_ - b.rep_);
    }
    Ext operator-() const { return f_ ? Ext(f_, -rep_) : Ext(); }
    friend Ext operator*(const Ext& a, const Ext& b) {
        auto f = merge(a, b);
        if (!f) return Ext();
        return Ext(f, a.rep_ * b.rep_);
    }
    friend bool operator==(const Ext& a, const Ext& b) { return (a - b).zero(); }
    friend bool operator!=(const Ext& a, const Ext& b) { return !(a == b); }

    Ext inverse() const {
        if (!f_ || rep_.zero()) throw std::domain_error("Ext: inverse of zero");
        auto [g, s, t] = xgcd(rep_, f_->modulus);
        if (g.degree() != 0)
            throw std::domain_error("Ext: modulus not irreducible (non-invertible element)");
        return Ext(f_, s * inv(g.c[0]));
    }

    Ext pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        if (!f_) {
            if (e == 0) throw std::domain_error("Ext: 0^0 without field context");
            return Ext();
        }
        Ext r = from_base(f_, one_like(f_->modulus.lc()));
        Ext b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// True when the element lies in the base field; if so *out is set.
    bool to_base(K* out) const {
        if (rep_.degree() > 0) return false;
        if (out) {
            if (rep_.zero())
                *out = f_ ? zero_like(f_->modulus.lc()) : K();
            else
                *out = rep_.c[0];
        }
        return true;
    }

  private:
    static std::shared_ptr<const ExtField<K>> merge(const Ext& a, const Ext& b) {
        if (a.f_ && b.f_ && a.f_ != b.f_)
            throw std::logic_error("Ext: mixing elements of distinct extension fields");
        return a.f_ ? a.f_ : b.f_;
    }

    std::shared_ptr<const ExtField<K>> f_;
    UPoly<K> rep_;
};

template <class K>
Ext<K> zero_like(const Ext<K>& a) {
    return a.has_field() ? Ext<K>::from_base(a.field(), zero_like(a.field()->modulus.lc()))
                         : Ext<K>();
}
template <class K>
Ext<K> one_like(const Ext<K>& a) {
    if (!a.has_field()) throw std::logic_error("Ext: one_like without field context");
    return Ext<K>::from_base(a.field(), one_like(a.field()->modulus.lc()));
}
template <class K>
bool is_zero(const Ext<K>& a) {
    return a.zero();
}
template <class K>
Ext<K> inv(const Ext<K>& a) {
    return a.inverse();
}

/// Tower depth of a coefficient field: 0 for Q, +1 per extension level.
template <class K>
struct tower_depth;
template <>
struct tower_depth<Rat> {
    static constexpr int value = 0;
};
template <class K>
struct tower_depth<Ext<K>> {
    static constexpr int value = tower_depth<K>::value + 1;
};

using Ext1 = Ext<Rat>;   // Q(alpha)
using Ext2 = Ext<Ext1>;  // Q(alpha)(beta)
using Ext3 = Ext<Ext2>;  // representable but beyond the supported depth

/// Lift a base element into Ext<K> over the given field.
template <class K>
Ext<K> embed(const std::shared_ptr<const ExtField<K>>& f, const K& k) {
    return Ext<K>::from_base(f, k);
}

template <class K>
UPoly<Ext<K>> embed_poly(const std::shared_ptr<const ExtField<K>>& f, const UPoly<K>& p) {
    UPoly<Ext<K>> r;
    r.c.reserve(p.c.size());
    for (const auto& k : p.c) r.c.push_back(Ext<K>::from_base(f, k));
    r.trim();
    return r;
}

/// Determinant of a square matrix over an integral domain with exact
/// division (Bareiss fraction-free elimination). Used for Sylvester
/// resultants whose entries are polynomials.
template <class R>
R bareiss_det(std::vector<std::vector<R>> m, const R& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    R prev = one;
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero(m[piv][k])) ++piv;
        if (piv == n) return one - one; // zero determinant
        if (piv != k) {
            std::swap(m[piv], m[k]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    R d = m[n - 1][n - 1];
    return neg ? (one - one) - d : d;
}

/// Resultant w.r.t. z of two polynomials given as UPoly in z with
/// coefficients in R = K[x] (or any exact-division domain).
template <class R>
R sylvester_resultant(const UPoly<R>& a, const UPoly<R>& b, const R& one) {
    const long da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return one - one;
    if (da == 0 && db == 0) return one;
    const R zero = one - one;
    const std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<R>> m(n, std::vector<R>(n, zero));
    for (long i = 0; i < db; ++i)
        for (long j = 0; j <= da; ++j) m[i][i + j] = a.c[da - j];
    for (long i = 0; i < da; ++i)
        for (long j = 0; j <= db; ++j) m[db + i][i + j] = b.c[db - j];
    return bareiss_det(std::move(m), one);
}

} // namespace recip

#endif
