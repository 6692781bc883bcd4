#include "recip/analyze.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "recip/errors.hpp"
#include "recip/parser.hpp"

namespace recip {

AnalysisDocument analyze_poly(const std::string& text, long bound, long truncation) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisDocument doc;

    const BiPoly f = parse_poly(text);
    const AffinePlaneCurve c = AffinePlaneCurve::create(f);
    doc.input = format_poly(c.f);

    PuiseuxOptions opt;
    opt.truncation = truncation;
    doc.verdict = classify(c, opt);

    if (!doc.verdict.egyptian) {
        try {
            doc.recip = recip_analysis(c, bound, opt);
        } catch (const InapplicableError& e) {
            doc.notes.push_back(e.what());
        }
    }
    doc.timing_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return doc;
}

std::string to_json(const AnalysisDocument& doc, int indent) {
    nlohmann::ordered_json j;
    j["input"] = doc.input;
    j["egyptian"] = doc.verdict.egyptian;
    j["points_at_infinity"] = doc.verdict.points_at_infinity;
    j["places_at_infinity"] = doc.verdict.places_at_infinity;
    j["places_exact"] = doc.verdict.places_exact;
    j["unique_point"] =
        doc.verdict.unique_point ? nlohmann::ordered_json(doc.verdict.unique_point->str())
                                 : nlohmann::ordered_json(nullptr);
    j["regular_at_infinity"] = doc.verdict.unique_point_regular
                                   ? nlohmann::ordered_json(*doc.verdict.unique_point_regular)
                                   : nlohmann::ordered_json(nullptr);
    if (doc.recip) {
        j["semigroup_generators"] = doc.recip->H.generators;
        j["genus"] = doc.recip->genus;
        j["mu"] = doc.recip->mu;
        j["weierstrass_point"] = doc.recip->weierstrass_point;
        j["v_recip_kind"] = doc.recip->v_recip == VRecipKind::Exact ? "Exact" : "Sandwich";
        j["dvr"] = doc.recip->recip_is_dvr;
        j["colength"] = doc.recip->colength ? nlohmann::ordered_json(*doc.recip->colength)
                                            : nlohmann::ordered_json(nullptr);
    } else {
        j["semigroup_generators"] = nullptr;
        j["genus"] = nullptr;
        j["mu"] = nullptr;
        j["weierstrass_point"] = nullptr;
        j["v_recip_kind"] = nullptr;
        j["dvr"] = nullptr;
        j["colength"] = nullptr;
    }
    j["status"] = "ok";
    std::vector<std::string> notes = doc.verdict.notes;
    notes.insert(notes.end(), doc.notes.begin(), doc.notes.end());
    j["notes"] = notes;
    j["version"] = doc.version;
    j["timing_ms"] = doc.timing_ms;
    return j.dump(indent);
}

std::string to_text(const AnalysisDocument& doc) {
    std::ostringstream os;
    os << "curve: " << doc.input << "\n";
    os << "points at infinity: " << doc.verdict.points_at_infinity << "\n";
    os << "places at infinity: " << (doc.verdict.places_exact ? "" : ">= ")
       << doc.verdict.places_at_infinity << "\n";
    os << "egyptian: " << (doc.verdict.egyptian ? "yes" : "no") << "\n";
    if (doc.verdict.unique_point) {
        os << "unique point at infinity: " << doc.verdict.unique_point->str()
           << (*doc.verdict.unique_point_regular ? " (regular)" : " (singular)") << "\n";
    }
    if (doc.recip) {
        const RecipReport& r = *doc.recip;
        os << "pole semigroup H = <";
        for (std::size_t i = 0; i < r.H.generators.size(); ++i)
            os << (i ? "," : "") << r.H.generators[i];
        os << ">  (bound " << r.bound << ", "
           << (r.completeness_verified ? "verified" : "heuristic") << ")\n";
        os << "genus: " << r.genus << "\n";
        os << "weierstrass point: " << (r.weierstrass_point ? "yes" : "no") << "\n";
        if (r.v_recip == VRecipKind::Exact) {
            os << "value semigroup of the reciprocal ring: exact, {0} followed by [" << r.mu
               << ",oo)\n";
            os << "colength: " << *r.colength << "\n";
        } else {
            os << "value semigroup of the reciprocal ring: sandwiched between H and {0} u ["
               << r.mu << ",oo)\n";
        }
        os << "reciprocal ring is a DVR: " << (r.recip_is_dvr ? "yes" : "no") << "\n";
    }
    for (const auto& n : doc.verdict.notes) os << "note: " << n << "\n";
    for (const auto& n : doc.notes) os << "note: " << n << "\n";
    return os.str();
}

} // namespace recip
