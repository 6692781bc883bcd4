#ifndef RECIP_SEMIGROUP_HPP
#define RECIP_SEMIGROUP_HPP

#include <optional>
#include <vector>

#include "recip/curve.hpp"
#include "recip/egyptian.hpp"
#include "recip/puiseux.hpp"

namespace recip {

/// Cofinite additive submonoid of N, stored as a membership bitmap out
/// to a bound at least the conductor.
struct NumericalSemigroup {
    std::vector<bool> in;          // membership for 0..bound()
    std::vector<long> generators;  // minimal generating set
    long mu = 0;                   // least nonzero element
    long genus = 0;                // number of gaps
    long frobenius = -1;           // largest gap; -1 when the semigroup is N

    static NumericalSemigroup from_generators(std::vector<long> gens, long bound);

    long bound() const { return static_cast<long>(in.size()) - 1; }
    bool contains(long n) const {
        if (n < 0) return false;
        if (n <= bound()) return in[static_cast<std::size_t>(n)];
        return true; // bound >= conductor by construction
    }
    bool is_all_of_n() const { return frobenius == -1; }
    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators == b.generators;
    }
};

long genus_of(const NumericalSemigroup& h);

/// True iff h differs from {0} ∪ [genus+1, ∞).
bool is_weierstrass_point(const NumericalSemigroup& h);

/// Element of the coordinate ring realizing a pole order at the place.
struct PoleWitness {
    long order = 0;
    BiPoly h;
    Rat leading; // leading series coefficient at the place
};

/// Pole semigroup H(X,p) at the unique place, computed by valuation-basis
/// completion up to `bound`. Requires a smooth affine curve.
NumericalSemigroup pole_semigroup(const AffinePlaneCurve& c, const PlaceAtInfinity& place,
                                  long bound, std::vector<PoleWitness>* witnesses = nullptr);

enum class VRecipKind { Exact, Sandwich };

struct RecipReport {
    NumericalSemigroup H;
    long genus = 0;
    long mu = 0;
    bool weierstrass_point = false;
    // Exact: the value semigroup of the reciprocal ring equals H.
    // Sandwich: it is only bounded between H and {0} ∪ [mu, ∞).
    VRecipKind v_recip = VRecipKind::Exact;
    bool recip_is_dvr = false;       // iff genus 0
    std::optional<long> colength;    // gaps of the value semigroup, Exact only
    long bound = 0;                  // completion bound used
    bool stabilized = false;         // conductor found strictly below the bound
    bool completeness_verified = false; // genus cross-check passed (or H = N)
    std::vector<PoleWitness> witnesses;
};

/// Full reciprocal-ring analysis at the unique place; `bound` = 0 picks
/// the default 2(d-1)(d-2)+2.
RecipReport recip_analysis(const AffinePlaneCurve& c, long bound = 0,
                           const PuiseuxOptions& opt = {});

} // namespace recip

#endif
