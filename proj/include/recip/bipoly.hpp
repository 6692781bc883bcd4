#ifndef RECIP_BIPOLY_HPP
#define RECIP_BIPOLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "recip/rat.hpp"
#include "recip/upoly.hpp"

namespace recip {

/// Exponent pair: (a, b) = (power of x, power of y).
using ExpPair = std::pair<long, long>;

/// Sparse bivariate polynomial over Q. No stored zero coefficients.
class BiPoly {
  public:
    BiPoly() = default;
    static BiPoly constant(const Rat& c) {
        BiPoly p;
        p.set(0, 0, c);
        return p;
    }
    static BiPoly var_x() {
        BiPoly p;
        p.set(1, 0, Rat(1));
        return p;
    }
    static BiPoly var_y() {
        BiPoly p;
        p.set(0, 1, Rat(1));
        return p;
    }
    static BiPoly monomial(long a, long b, const Rat& c) {
        BiPoly p;
        p.set(a, b, c);
        return p;
    }

    const std::map<ExpPair, Rat>& terms() const { return t_; }
    bool zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == ExpPair{0, 0}); }

    Rat coeff(long a, long b) const {
        auto it = t_.find({a, b});
        return it == t_.end() ? Rat() : it->second;
    }
    void set(long a, long b, const Rat& c) {
        if (c.is_zero())
            t_.erase({a, b});
        else
            t_[{a, b}] = c;
    }
    void add_term(long a, long b, const Rat& c) {
        auto it = t_.find({a, b});
        if (it == t_.end()) {
            if (!c.is_zero()) t_[{a, b}] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.first + e.second);
        return d;
    }
    long degree_x() const {
        long d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.first);
        return d;
    }
    long degree_y() const {
        long d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, e.second);
        return d;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e.first, e.second, c);
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e.first, e.second, -c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const Rat& s) {
        BiPoly r;
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.t_) r.t_[e] = c * s;
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(long e) const {
        BiPoly r = constant(Rat(1)), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    BiPoly deriv_x() const {
        BiPoly r;
        for (const auto& [e, c] : t_)
            if (e.first > 0) r.t_[{e.first - 1, e.second}] = c * Rat(e.first);
        return r;
    }
    BiPoly deriv_y() const {
        BiPoly r;
        for (const auto& [e, c] : t_)
            if (e.second > 0) r.t_[{e.first, e.second - 1}] = c * Rat(e.second);
        return r;
    }

    /// The homogeneous degree-d part, d = total degree.
    BiPoly leading_form() const {
        BiPoly r;
        long d = total_degree();
        for (const auto& [e, c] : t_)
            if (e.first + e.second == d) r.t_[e] = c;
        return r;
    }

    /// As a dense polynomial in y with UPoly-in-x coefficients.
    std::vector<UPoly<Rat>> by_y() const {
        std::vector<UPoly<Rat>> v(static_cast<std::size_t>(std::max<long>(degree_y() + 1, 0)));
        for (const auto& [e, c] : t_) {
            auto& p = v[e.second];
            if (p.c.size() <= static_cast<std::size_t>(e.first)) p.c.resize(e.first + 1, Rat());
            p.c[e.first] = c;
        }
        for (auto& p : v) p.trim();
        return v;
    }
    std::vector<UPoly<Rat>> by_x() const {
        std::vector<UPoly<Rat>> v(static_cast<std::size_t>(std::max<long>(degree_x() + 1, 0)));
        for (const auto& [e, c] : t_) {
            auto& p = v[e.first];
            if (p.c.size() <= static_cast<std::size_t>(e.second)) p.c.resize(e.second + 1, Rat());
            p.c[e.second] = c;
        }
        for (auto& p : v) p.trim();
        return v;
    }
    static BiPoly from_by_y(const std::vector<UPoly<Rat>>& v) {
        BiPoly r;
        for (std::size_t b = 0; b < v.size(); ++b)
            for (std::size_t a = 0; a < v[b].c.size(); ++a)
                r.add_term(static_cast<long>(a), static_cast<long>(b), v[b].c[a]);
        return r;
    }

    BiPoly subst_x_shift(const Rat& c) const; // x -> x + c
    Rat eval(const Rat& x, const Rat& y) const {
        Rat r;
        for (const auto& [e, co] : t_) r += co * x.pow(e.first) * y.pow(e.second);
        return r;
    }
    /// Substitute x = p, y = q for arbitrary bivariate arguments.
    BiPoly compose(const BiPoly& p, const BiPoly& q) const;

  private:
    std::map<ExpPair, Rat> t_;
};

/// Determinant of the Sylvester matrix of p and q with respect to y.
/// Errors when both inputs are constant in y.
UPoly<Rat> resultant_y(const BiPoly& p, const BiPoly& q);
UPoly<Rat> resultant_x(const BiPoly& p, const BiPoly& q);

/// Divisibility of h by f in Q[x,y].
bool bipoly_divides(const BiPoly& f, const BiPoly& h);

} // namespace recip

#endif
