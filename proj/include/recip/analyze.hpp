#ifndef RECIP_ANALYZE_HPP
#define RECIP_ANALYZE_HPP

#include <optional>
#include <string>

#include "recip/egyptian.hpp"
#include "recip/semigroup.hpp"

namespace recip {

inline constexpr const char* kToolVersion = "1.0.0";

/// Full report for one input polynomial: the Egyptian decision plus, in
/// the non-Egyptian smooth case, the reciprocal-ring analysis.
struct AnalysisDocument {
    std::string input; // canonical form of the parsed polynomial
    EgyptianVerdict verdict;
    std::optional<RecipReport> recip;
    std::vector<std::string> notes; // e.g. why the semigroup stage was skipped
    std::string version = kToolVersion;
    double timing_ms = 0.0;
};

/// Parse, validate and analyze; `bound` = 0 and `truncation` = 0 select
/// the documented defaults. Throws InputError / AnalysisError.
AnalysisDocument analyze_poly(const std::string& text, long bound = 0, long truncation = 0);

/// `indent` < 0 emits one compact line (JSON-lines friendly).
std::string to_json(const AnalysisDocument& doc, int indent = 2);
std::string to_text(const AnalysisDocument& doc);

} // namespace recip

#endif
