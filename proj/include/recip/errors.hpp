#ifndef RECIP_ERRORS_HPP
#define RECIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recip {

// User-facing input problems (bad syntax, invalid curve). CLI exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SyntaxError : InputError {
    std::size_t position; // 1-based character position
    SyntaxError(std::size_t pos, const std::string& expected)
        : InputError("syntax error at position " + std::to_string(pos) + ": " + expected),
          position(pos) {}
};

// Limits of the analysis engine (not user errors). CLI exit code 3.
struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Extension-tower arithmetic past depth 2 was requested.
struct DepthExceeded : AnalysisError {
    DepthExceeded() : AnalysisError("DepthExceeded: extension tower deeper than 2 requested") {}
};

// Puiseux recursion exceeded its termination bound; indicates a
// non-squarefree or reducible input slipped through validation.
struct NonTermination : AnalysisError {
    NonTermination() : AnalysisError("NonTermination: branch recursion exceeded its depth bound") {}
};

struct PrecisionExhausted : AnalysisError {
    PrecisionExhausted() : AnalysisError("PrecisionExhausted: series truncation ceiling reached") {}
};

struct ZeroFunction : AnalysisError {
    ZeroFunction() : AnalysisError("ZeroFunction: polynomial vanishes on the curve") {}
};

struct NotIrreducible : AnalysisError {
    NotIrreducible() : AnalysisError("NotIrreducible: curve failed an irreducibility consistency check") {}
};

// Semigroup analysis asked for on a curve that does not satisfy its gates.
struct InapplicableError : AnalysisError {
    explicit InapplicableError(const std::string& why) : AnalysisError("Inapplicable: " + why) {}
};

struct EgyptianError : AnalysisError {
    EgyptianError() : AnalysisError("curve is Egyptian; reciprocal-complement analysis does not apply") {}
};

// The valuation-basis completion missed a pole order that the genus
// cross-check proves must exist.
struct SemigroupIncomplete : AnalysisError {
    SemigroupIncomplete() : AnalysisError("SemigroupIncomplete: completion contradicts the genus cross-check") {}
};

} // namespace recip

#endif
