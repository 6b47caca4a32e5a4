#ifndef SGDIM_SUITES_HPP
#define SGDIM_SUITES_HPP

// Randomized and corpus-driven verification suites, runnable from the CLI.
// Each suite returns structured counts so callers can gate on exact zeros.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sgdim {

struct OracleSuiteResult {
    int rings = 0;
    int ideals = 0;
    int reduction_runs = 0;
    int value_failures = 0; // multiplicity routes disagreeing
    int chain_failures = 0; // reduction invariants breaking the expected chain
    std::vector<std::string> notes;

    bool ok() const { return rings > 0 && value_failures == 0 && chain_failures == 0; }
    nlohmann::json to_json() const;
};

// Random artinian and one-dimensional hypersurface rings; for each, random
// certified m-primary ideals. The two multiplicity routes must agree, across
// several reduction seeds, and every verified reduction Q must satisfy
// nu(Q) = dim R and ll(R/Q) <= l(R/Q) = e.
OracleSuiteResult suite_oracle_random(std::uint64_t seed);

struct KoszulSuiteResult {
    int cases = 0;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> notes;

    bool ok() const { return cases > 0 && failures == 0; }
    nlohmann::json to_json() const;
};

// Randomized Koszul runs over small artinian models: the differential
// squares to zero, homology Euler characteristics match the terms, the
// sequence ideal annihilates homology, homology vanishes exactly outside
// [depth - |seq|, 0], and the truncation tower verifies with one triangle
// per degree of that range.
KoszulSuiteResult suite_koszul_random(std::uint64_t seed, int cases);

struct CorpusSuiteResult {
    int entries = 0;
    int failures = 0;
    std::vector<std::string> notes;

    bool ok() const { return entries > 0 && failures == 0; }
    nlohmann::json to_json() const;
};

// Run the bounds pipeline on every corpus document and compare the rendered
// JSON byte-for-byte against the golden reports next to them.
CorpusSuiteResult suite_corpus(const std::string& corpus_dir, bool check_golden);

// The corpus entry names, in running order.
std::vector<std::string> corpus_names();

// Full bounds pipeline on one document file, rendered as the canonical JSON
// report string (two-space indent, trailing newline).
std::string corpus_report_string(const std::string& doc_path);

std::string read_text_file(const std::string& path);

} // namespace sgdim

#endif
