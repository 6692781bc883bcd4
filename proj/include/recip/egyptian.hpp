#ifndef RECIP_EGYPTIAN_HPP
#define RECIP_EGYPTIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "recip/curve.hpp"
#include "recip/puiseux.hpp"

namespace recip {

/// Decision for one curve: Egyptian iff there are at least two places at
/// infinity. `places_exact` is false when only a lower bound was computed
/// (irrational infinity points with the verdict already settled).
struct EgyptianVerdict {
    bool egyptian = false;
    long points_at_infinity = 0;
    long places_at_infinity = 0;
    bool places_exact = true;
    std::optional<ProjPoint> unique_point;      // present iff points = 1
    std::optional<bool> unique_point_regular;   // present iff points = 1
    std::vector<std::string> notes;
};

EgyptianVerdict classify(const AffinePlaneCurve& c, const PuiseuxOptions& opt = {});

/// Description of the integral closure of the ring of reciprocals in the
/// non-Egyptian case: the local ring at the unique infinity point, or the
/// DVR of the unique place when that point is singular.
struct IntegralClosureReport {
    ProjPoint point;
    bool point_regular = false;   // closure regular at the point
    bool local_ring_is_dvr = false; // equivalent to point_regular
    PuiseuxBranchClass place;     // the witnessing branch/parametrization
    bool recip_contained = false; // inclusion in the local ring, recorded when regular
};

IntegralClosureReport integral_closure_report(const AffinePlaneCurve& c,
                                              const EgyptianVerdict& v,
                                              const PuiseuxOptions& opt = {});

} // namespace recip

#endif
