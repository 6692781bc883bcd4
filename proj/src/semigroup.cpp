#include "recip/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "recip/errors.hpp"

namespace recip {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long> gens, long bound) {
    std::vector<long> pos;
    for (long g : gens)
        if (g > 0) pos.push_back(g);
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    if (pos.empty()) throw AnalysisError("semigroup: no positive generators");
    long g = 0;
    for (long x : pos) g = std::gcd(g, x);
    if (g != 1) throw AnalysisError("semigroup: generators are not coprime");

    const long mu = pos.front();
    long b = std::max<long>(bound, 2 * mu + 2);
    NumericalSemigroup s;
    for (int tries = 0;; ++tries) {
        s.in.assign(static_cast<std::size_t>(b + 1), false);
        s.in[0] = true;
        for (long n = 1; n <= b; ++n)
            for (long x : pos) {
                if (x <= n && s.in[static_cast<std::size_t>(n - x)]) {
                    s.in[static_cast<std::size_t>(n)] = true;
                    break;
                }
            }
        long fr = -1;
        for (long n = b; n >= 1; --n)
            if (!s.in[static_cast<std::size_t>(n)]) {
                fr = n;
                break;
            }
        // a full run of mu members past the last gap certifies the conductor
        if (fr + mu <= b) {
            s.frobenius = fr;
            break;
        }
        if (tries >= 40) throw AnalysisError("semigroup: conductor not reached");
        b *= 2;
    }
    s.mu = mu;
    s.genus = 0;
    for (long n = 1; n <= s.frobenius; ++n)
        if (!s.in[static_cast<std::size_t>(n)]) ++s.genus;
    // minimal generators: members not sums of two smaller nonzero members
    for (long m = 1; m <= s.frobenius + mu + 1 && m <= s.bound(); ++m) {
        if (!s.in[static_cast<std::size_t>(m)]) continue;
        bool split = false;
        for (long a = 1; a < m && !split; ++a)
            if (s.in[static_cast<std::size_t>(a)] && s.in[static_cast<std::size_t>(m - a)])
                split = true;
        if (!split) s.generators.push_back(m);
    }
    return s;
}

long genus_of(const NumericalSemigroup& h) { return h.genus; }

bool is_weierstrass_point(const NumericalSemigroup& h) {
    // not Weierstrass iff the gaps are exactly 1..genus
    return h.frobenius != (h.genus == 0 ? -1 : h.genus);
}

namespace {

struct Witness {
    BiPoly h;
    Rat leading;
};

} // namespace

NumericalSemigroup pole_semigroup(const AffinePlaneCurve& c, const PlaceAtInfinity& place,
                                  long bound, std::vector<PoleWitness>* witnesses) {
    if (bound < 1) throw AnalysisError("pole_semigroup: bound must be positive");
    if (!is_affine_smooth(c))
        throw InapplicableError("the affine curve is singular; its ring is not a Dedekind-type domain");

    std::map<long, Witness> w; // pole order -> witness element of the ring
    w[0] = {BiPoly::constant(Rat(1)), Rat(1)};

    auto insert = [&](BiPoly h, Rat lead, long order) -> bool {
        // reduce against existing witnesses until a fresh order appears
        while (true) {
            auto it = w.find(order);
            if (it == w.end()) {
                if (order > bound) return false;
                w[order] = {std::move(h), std::move(lead)};
                return true;
            }
            h = h - it->second.h * (lead / it->second.leading);
            Valuation val;
            try {
                val = valuation_with_leading(place, h);
            } catch (const ZeroFunction&) {
                return false; // exact linear relation in the ring
            }
            if (val.v > 0) throw AnalysisError("pole_semigroup: positive valuation in the ring");
            order = -val.v;
            lead = val.leading;
        }
    };

    const auto vx = valuation_with_leading(place, BiPoly::var_x());
    const auto vy = valuation_with_leading(place, BiPoly::var_y());
    if (-vx.v <= bound) insert(BiPoly::var_x(), vx.leading, -vx.v);
    if (-vy.v <= bound) insert(BiPoly::var_y(), vy.leading, -vy.v);

    // close under products (orders add), folding collisions into
    // lower-order differences, until nothing below the bound changes
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<long> orders;
        for (const auto& [o, wit] : w)
            if (o > 0) orders.push_back(o);
        for (std::size_t i = 0; i < orders.size(); ++i) {
            for (std::size_t j = i; j < orders.size(); ++j) {
                const long m = orders[i] + orders[j];
                if (m > bound || w.count(m)) continue;
                const Witness& a = w[orders[i]];
                const Witness& b = w[orders[j]];
                if (insert(a.h * b.h, a.leading * b.leading, m)) changed = true;
            }
        }
    }

    std::vector<long> realized;
    for (const auto& [o, wit] : w)
        if (o > 0) realized.push_back(o);
    if (realized.empty()) throw AnalysisError("pole_semigroup: no pole orders below the bound");
    auto H = NumericalSemigroup::from_generators(realized, bound);

    // every semigroup element below the bound must be realized (closure)
    for (long n = 1; n <= bound; ++n)
        if (H.contains(n) != (w.count(n) > 0)) throw AnalysisError("pole_semigroup: closure gap");

    if (witnesses) {
        witnesses->clear();
        for (const auto& [o, wit] : w) witnesses->push_back({o, wit.h, wit.leading});
    }
    return H;
}

RecipReport recip_analysis(const AffinePlaneCurve& c, long bound, const PuiseuxOptions& opt) {
    const EgyptianVerdict verdict = classify(c, opt);
    if (verdict.egyptian) throw EgyptianError();
    if (!is_affine_smooth(c))
        throw InapplicableError("the affine curve is singular; semigroup analysis requires a smooth affine part");

    const long d = c.degree;
    RecipReport r;
    r.bound = bound > 0 ? bound : 2 * (d - 1) * (d - 2) + 2;
    const PlaceAtInfinity place = unique_place(c, chart_at(c, *verdict.unique_point), opt);
    r.H = pole_semigroup(c, place, r.bound, &r.witnesses);
    r.genus = genus_of(r.H);
    r.mu = r.H.mu;
    r.weierstrass_point = is_weierstrass_point(r.H);
    r.v_recip = r.weierstrass_point ? VRecipKind::Sandwich : VRecipKind::Exact;
    if (!r.weierstrass_point) r.colength = r.genus;
    r.recip_is_dvr = (r.genus == 0);
    r.stabilized = r.H.frobenius + 1 <= r.bound;

    if (*verdict.unique_point_regular) {
        // projective closure is nonsingular: plane-curve genus must match
        if (r.genus != (d - 1) * (d - 2) / 2) throw SemigroupIncomplete();
        r.completeness_verified = true;
    } else {
        r.completeness_verified = r.H.is_all_of_n();
    }
    return r;
}

} // namespace recip
