#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "recip/analyze.hpp"
#include "recip/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCorpusFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitAnalysisError = 3;

int run_analyze(const std::string& poly, bool json, long bound, long truncation) {
    try {
        const auto doc = recip::analyze_poly(poly, bound, truncation);
        std::cout << (json ? recip::to_json(doc) : recip::to_text(doc)) << "\n";
        return kExitOk;
    } catch (const recip::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const recip::AnalysisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysisError;
    }
}

struct Row {
    std::string input, points, places, egyptian, genus, dvr, status;
};

int run_corpus(const std::string& path, bool json, long bound, long truncation) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return kExitInputError;
    }
    std::vector<Row> rows;
    bool all_ok = true;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        const std::string poly = line.substr(start);

        Row r;
        r.input = poly;
        try {
            const auto doc = recip::analyze_poly(poly, bound, truncation);
            r.input = doc.input;
            r.points = std::to_string(doc.verdict.points_at_infinity);
            r.places = (doc.verdict.places_exact ? "" : ">=") +
                       std::to_string(doc.verdict.places_at_infinity);
            r.egyptian = doc.verdict.egyptian ? "yes" : "no";
            r.genus = doc.recip ? std::to_string(doc.recip->genus) : "-";
            r.dvr = doc.recip ? (doc.recip->recip_is_dvr ? "yes" : "no") : "-";
            r.status = "ok";
            if (json) std::cout << recip::to_json(doc, -1) << "\n";
        } catch (const std::exception& e) {
            r.points = r.places = r.egyptian = r.genus = r.dvr = "-";
            r.status = std::string("ERROR: ") + e.what();
            all_ok = false;
            if (json) {
                std::cout << "{\"input\": " << std::quoted(poly) << ", \"status\": "
                          << std::quoted(r.status) << "}\n";
            }
        }
        rows.push_back(std::move(r));
    }

    if (!json) {
        std::size_t wi = 5;
        for (const auto& r : rows) wi = std::max(wi, r.input.size());
        std::cout << std::left << std::setw(static_cast<int>(wi) + 2) << "input" << std::setw(8)
                  << "points" << std::setw(8) << "places" << std::setw(10) << "egyptian"
                  << std::setw(7) << "genus" << std::setw(5) << "dvr" << "status\n";
        for (const auto& r : rows) {
            std::cout << std::left << std::setw(static_cast<int>(wi) + 2) << r.input
                      << std::setw(8) << r.points << std::setw(8) << r.places << std::setw(10)
                      << r.egyptian << std::setw(7) << r.genus << std::setw(5) << r.dvr
                      << r.status << "\n";
        }
    }
    return all_ok ? kExitOk : kExitCorpusFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Egyptian-ring analyzer for plane affine curves over Q"};
    app.require_subcommand(1);

    bool json = false;
    long bound = 0, truncation = 0;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_option("--bound", bound, "semigroup completion bound (default 2(d-1)(d-2)+2)");
    app.add_option("--truncation", truncation, "series truncation order (default 2(d^2+1))");

    std::string poly, path;
    auto* analyze = app.add_subcommand("analyze", "analyze one polynomial");
    analyze->add_option("poly", poly, "polynomial in x and y")->required();
    auto* corpus = app.add_subcommand("corpus", "analyze a file of polynomials, one per line");
    corpus->add_option("file", path, "input file (# starts a comment)")->required();

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand(analyze)) return run_analyze(poly, json, bound, truncation);
    return run_corpus(path, json, bound, truncation);
}
