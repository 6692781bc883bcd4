#include "recip/egyptian.hpp"

#include "recip/errors.hpp"

namespace recip {

EgyptianVerdict classify(const AffinePlaneCurve& c, const PuiseuxOptions& opt) {
    const auto classes = points_at_infinity(c);
    EgyptianVerdict v;
    for (const auto& cl : classes) v.points_at_infinity += cl.class_size;

    if (v.points_at_infinity > 1) {
        v.egyptian = true;
        bool all_rational = true;
        for (const auto& cl : classes)
            if (!cl.rational_point) all_rational = false;
        if (all_rational) {
            for (const auto& cl : classes)
                v.places_at_infinity += places_over(chart_at(c, *cl.rational_point), opt);
            v.places_exact = true;
        } else {
            // one place per geometric point is already enough to decide
            v.places_at_infinity = v.points_at_infinity;
            v.places_exact = false;
            v.notes.push_back("places_at_infinity is a lower bound (irrational points skipped)");
        }
        return v;
    }

    // a single point at infinity is necessarily rational
    const ProjPoint p = *classes.at(0).rational_point;
    v.unique_point = p;
    v.unique_point_regular = is_regular_at(c, p);
    v.places_at_infinity = places_over(chart_at(c, p), opt);
    v.places_exact = true;
    v.egyptian = v.places_at_infinity > 1;
    if (*v.unique_point_regular && v.places_at_infinity != 1)
        throw NotIrreducible(); // a regular point carries exactly one place
    if (!v.egyptian)
        v.notes.push_back("unique place at infinity: ring of reciprocals is a proper local subring");
    return v;
}

IntegralClosureReport integral_closure_report(const AffinePlaneCurve& c,
                                              const EgyptianVerdict& v,
                                              const PuiseuxOptions& opt) {
    if (v.egyptian) throw EgyptianError();
    IntegralClosureReport r;
    r.point = *v.unique_point;
    r.point_regular = *v.unique_point_regular;
    r.local_ring_is_dvr = r.point_regular;
    r.place = branch_classes(chart_at(c, r.point), opt).at(0);
    r.recip_contained = r.point_regular;
    return r;
}

} // namespace recip
