// Shared helpers for the test binaries: randomized generators and
// independent brute-force oracles. Everything here is deliberately
// written against the most naive algorithm available so it cross-checks
// the library rather than mirroring it.
#ifndef RECIP_TESTS_SUPPORT_HPP
#define RECIP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "recip/analyze.hpp"
#include "recip/curve.hpp"
#include "recip/egyptian.hpp"
#include "recip/errors.hpp"
#include "recip/parser.hpp"
#include "recip/puiseux.hpp"
#include "recip/semigroup.hpp"

namespace testsupport {

using namespace recip;

// ---------- randomized inputs ----------

inline Rat random_rat(std::mt19937& rng, int span = 9) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 4);
    return Rat(num(rng), den(rng));
}

inline BiPoly random_bipoly(std::mt19937& rng, long max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> expo(0, max_deg);
    BiPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        long a = expo(rng);
        long b = expo(rng);
        if (a + b > max_deg) continue;
        p.add_term(a, b, random_rat(rng));
    }
    return p;
}

inline BiPoly random_nonzero_bipoly(std::mt19937& rng, long max_deg, int max_terms) {
    for (;;) {
        BiPoly p = random_bipoly(rng, max_deg, max_terms);
        if (!p.zero()) return p;
    }
}

// x -> x + c applied to a whole polynomial (brute-force substitution)
inline BiPoly shift_x(const BiPoly& f, const Rat& c) {
    const BiPoly repl = BiPoly::var_x() + BiPoly::constant(c);
    return f.compose(repl, BiPoly::var_y());
}

// x -> x + t*y (unimodular shear; keeps squarefreeness)
inline BiPoly shear_xy(const BiPoly& f, long t) {
    const BiPoly repl = BiPoly::var_x() + BiPoly::var_y() * Rat(t);
    return f.compose(repl, BiPoly::var_y());
}

// ---------- brute-force oracles ----------

// Additive closure of a generator set intersected with [0, bound].
inline std::set<long> closure_oracle(const std::vector<long>& gens, long bound) {
    std::set<long> s{0};
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<long> cur(s.begin(), s.end());
        for (long a : cur)
            for (long g : gens) {
                if (g <= 0 || a + g > bound) continue;
                if (s.insert(a + g).second) changed = true;
            }
    }
    return s;
}

// Independent parametrization of the worked elliptic example at its
// infinity point: local equation u = v^3 - u^2 v, solved for u by naive
// fixed-point iteration with v = t. Integer coefficients throughout.
inline std::vector<long long> elliptic_u_series(int order) {
    std::vector<long long> u(order + 1, 0); // u(t), index = exponent
    auto mul = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> r(order + 1, 0);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    for (int it = 0; it < order + 2; ++it) {
        // u <- v^3 - u^2 v  with v = t
        std::vector<long long> u2 = mul(u, u);
        std::vector<long long> next(order + 1, 0);
        if (order >= 3) next[3] = 1;
        for (int i = 0; i + 1 <= order; ++i) next[i + 1] -= u2[i];
        u = next;
    }
    return u;
}

// ---------- property suites (each counts its cases) ----------

struct PropResult {
    long cases = 0;
    long failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0 && cases >= 200; }
    void fail(const std::string& what) {
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }
};

inline PropResult prop_parser_roundtrip(long n = 250) {
    std::mt19937 rng(20240901);
    PropResult res;
    for (long i = 0; i < n; ++i) {
        const BiPoly p = random_bipoly(rng, 10, 12);
        ++res.cases;
        try {
            if (parse_poly(format_poly(p)) != p) res.fail("round-trip mismatch: " + format_poly(p));
        } catch (const std::exception& e) {
            res.fail(std::string("round-trip threw: ") + e.what());
        }
    }
    return res;
}

inline const std::vector<std::string>& unique_place_pool() {
    static const std::vector<std::string> pool = {
        "y^2 - x^3 + x", "y - x^3", "y^2 - x^5 - 1", "x^4 + y^3 + y", "y - x^2",
    };
    return pool;
}

inline PropResult prop_valuation_axioms(long per_curve = 50) {
    std::mt19937 rng(20240902);
    PropResult res;
    for (const auto& src : unique_place_pool()) {
        const auto c = AffinePlaneCurve::create(parse_poly(src));
        const auto verdict = classify(c);
        const auto place = unique_place(c, chart_at(c, *verdict.unique_point));
        long done = 0;
        while (done < per_curve) {
            const BiPoly h1 = random_nonzero_bipoly(rng, 6, 5);
            const BiPoly h2 = random_nonzero_bipoly(rng, 6, 5);
            long v1, v2;
            try {
                v1 = valuation_at(place, h1);
                v2 = valuation_at(place, h2);
            } catch (const ZeroFunction&) {
                continue;
            }
            ++done;
            ++res.cases;
            try {
                if (valuation_at(place, h1 * h2) != v1 + v2) {
                    res.fail("v(h1*h2) != v(h1)+v(h2) on " + src);
                    continue;
                }
                const BiPoly sum = h1 + h2;
                long vs;
                try {
                    vs = valuation_at(place, sum);
                } catch (const ZeroFunction&) {
                    continue; // v(0) = +infinity: inequality holds vacuously
                }
                if (vs < std::min(v1, v2)) res.fail("v(h1+h2) < min on " + src);
                if (v1 != v2 && vs != std::min(v1, v2)) res.fail("strict min violated on " + src);
            } catch (const std::exception& e) {
                res.fail(std::string("valuation threw: ") + e.what());
            }
        }
    }
    return res;
}

inline PropResult prop_degree_accounting(long target = 210) {
    std::mt19937 rng(20240903);
    const std::vector<std::string> pool = {
        "y^2 - x^3 + x", "y - x^3", "x^3 - x*y - y", "y^2 - x^5 - 1",
        "x^4 + y^3 + y", "y - x^2",  "x^2 + y^2 - 1", "y^3 - x^4 + x*y",
    };
    std::uniform_int_distribution<long> shear(-3, 3);
    std::uniform_int_distribution<long> shift(-5, 5);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    PropResult res;
    while (res.cases < target) {
        BiPoly f = parse_poly(pool[pick(rng)]);
        f = shear_xy(f, shear(rng));
        f = shift_x(f, Rat(shift(rng)));
        AffinePlaneCurve c;
        try {
            c = AffinePlaneCurve::create(f);
        } catch (const InputError&) {
            continue;
        }
        for (const auto& cl : points_at_infinity(c)) {
            if (!cl.rational_point) continue;
            const LocalChart chart = chart_at(c, *cl.rational_point);
            ++res.cases;
            try {
                long lhs = 0;
                for (const auto& b : branch_classes(chart)) lhs += b.ram_index * b.residue_degree;
                // right side recomputed here: order of g(0,v) at v = 0
                long rhs = -1;
                for (long b = 0; rhs < 0 && b <= chart.g.degree_y(); ++b)
                    if (!chart.g.coeff(0, b).is_zero()) rhs = b;
                if (lhs != rhs) res.fail("sum e*d mismatch at " + cl.rational_point->str());
            } catch (const std::exception& e) {
                res.fail(std::string("branch expansion threw: ") + e.what());
            }
        }
    }
    return res;
}

inline PropResult prop_semigroup_closure(long n = 220) {
    std::mt19937 rng(20240904);
    std::uniform_int_distribution<long> gen(2, 15);
    std::uniform_int_distribution<int> count(2, 4);
    PropResult res;
    while (res.cases < n) {
        std::vector<long> gens;
        const int k = count(rng);
        for (int i = 0; i < k; ++i) gens.push_back(gen(rng));
        long g = 0;
        for (long x : gens) g = std::gcd(g, x);
        if (g != 1) gens.push_back(g + 1); // force coprimality
        ++res.cases;
        try {
            const auto h = NumericalSemigroup::from_generators(gens, 64);
            const auto oracle = closure_oracle(gens, h.bound());
            for (long m = 0; m <= h.bound(); ++m)
                if (h.in[static_cast<std::size_t>(m)] != (oracle.count(m) > 0)) {
                    res.fail("membership mismatch at " + std::to_string(m));
                    break;
                }
            for (long a = 0; a <= 64; ++a)
                for (long b = a; a + b <= 64; ++b)
                    if (h.contains(a) && h.contains(b) && !h.contains(a + b)) {
                        res.fail("not closed under addition");
                        a = b = 65;
                    }
        } catch (const std::exception& e) {
            res.fail(std::string("semigroup threw: ") + e.what());
        }
    }
    return res;
}

inline PropResult prop_realization_invariance(long n = 204) {
    std::mt19937 rng(20240905);
    const std::vector<std::string> pool = {
        "x^3 + y^3 - 1", "y^2 - x^3 + x", "y - x^3",
        "x^3 - x*y - y", "y^2 - x^5 - 1", "y - x",
    };
    std::uniform_int_distribution<long> shift(-20, 20);
    PropResult res;
    std::vector<AnalysisDocument> base;
    for (const auto& s : pool) base.push_back(analyze_poly(s));
    while (res.cases < n) {
        for (std::size_t i = 0; i < pool.size() && res.cases < n; ++i) {
            const long c = shift(rng);
            ++res.cases;
            try {
                const BiPoly f = shift_x(parse_poly(pool[i]), Rat(c));
                const auto doc = analyze_poly(format_poly(f));
                const auto& a = base[i];
                bool same = doc.verdict.egyptian == a.verdict.egyptian &&
                            doc.verdict.points_at_infinity == a.verdict.points_at_infinity &&
                            doc.verdict.places_at_infinity == a.verdict.places_at_infinity &&
                            doc.verdict.places_exact == a.verdict.places_exact &&
                            doc.verdict.unique_point.has_value() ==
                                a.verdict.unique_point.has_value() &&
                            doc.recip.has_value() == a.recip.has_value();
                if (same && doc.verdict.unique_point)
                    same = *doc.verdict.unique_point == *a.verdict.unique_point &&
                           *doc.verdict.unique_point_regular == *a.verdict.unique_point_regular;
                if (same && doc.recip) {
                    same = doc.recip->H.generators == a.recip->H.generators &&
                           doc.recip->genus == a.recip->genus && doc.recip->mu == a.recip->mu &&
                           doc.recip->weierstrass_point == a.recip->weierstrass_point &&
                           doc.recip->v_recip == a.recip->v_recip &&
                           doc.recip->recip_is_dvr == a.recip->recip_is_dvr &&
                           doc.recip->colength == a.recip->colength;
                }
                if (!same)
                    res.fail("verdict changed under x -> x + " + std::to_string(c) + " on " +
                             pool[i]);
            } catch (const std::exception& e) {
                res.fail(std::string("shifted analysis threw: ") + e.what());
            }
        }
    }
    return res;
}

} // namespace testsupport

#endif
