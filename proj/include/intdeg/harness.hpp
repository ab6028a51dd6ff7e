#pragma once

/* Seed-deterministic randomized property harness. Each suite generates its
 * cases from the seed, re-checks the library invariants on them, and
 * reports case/failure counts; any failure carries a counterexample dump
 * (entry-shrunk for the lattice suite). */

#include <string>
#include <vector>

#include "intdeg/json_io.hpp"

namespace intdeg {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;
};

struct HarnessReport {
    unsigned long long seed = 0;
    int cases_requested = 0;
    int certified_towers = 0;          // tower reports backed by a certificate
    int numeric_substitutions = 0;     // concrete certificate re-verifications
    std::vector<SuiteResult> suites;

    bool ok() const;
    int total_cases() const;
    std::string first_failure() const;
    const SuiteResult* suite(const std::string& name) const;
};

/// cases scales the per-suite case counts (floors keep every suite
/// meaningful even for small values).
HarnessReport run_harness(unsigned long long seed, int cases);

ordered_json harness_to_json(const HarnessReport& rep);

} // namespace intdeg
