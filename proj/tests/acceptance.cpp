// Acceptance gate: runs every verification suite and prints one line per
// check.  Exits nonzero if any suite fails.

#include <chrono>
#include <cstdio>

#include "hyperjet/verify.hpp"

int main()
{
    using clock = std::chrono::steady_clock;
    const auto names = hyperjet::verify_suite_names();
    int failures = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto t0 = clock::now();
        hyperjet::SuiteResult r = hyperjet::run_verify_suite(names[i], 12);
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        std::printf("[%2zu/%zu] %s  %s  (%s)  [%.1fs]\n", i + 1, names.size(),
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), secs);
        std::fflush(stdout);
        if (!r.passed) ++failures;
    }
    if (failures > 0) {
        std::printf("%d of %zu checks failed\n", failures, names.size());
        return 1;
    }
    std::printf("all %zu checks passed\n", names.size());
    return 0;
}
