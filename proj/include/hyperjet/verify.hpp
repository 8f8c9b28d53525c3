// Cross-route identity suites.  Each suite checks one family of
// independent computations against another and reports a single
// pass/fail verdict with a short diagnostic.  The CLI `verify`
// subcommand and the acceptance runner share these entry points.
#pragma once

#include <string>
#include <vector>

namespace hyperjet {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Fixed suite order; index i names acceptance check i+1.
const std::vector<std::string>& verify_suite_names();

// Runs one suite by name; max_m caps the weight sweeps where a suite
// has one (rank-consistency, pieri-ssyt).  Unknown names throw.
SuiteResult run_verify_suite(const std::string& name, long max_m = 12);

std::vector<SuiteResult> run_all_verify_suites(long max_m = 12);

}  // namespace hyperjet
