// Acceptance suite: runs every exact criterion and prints one line per
// criterion.  Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>

#include "wbm/verify.hpp"

int main() {
    wbm::VerifyOptions opt;
    opt.max_n = 3;
    opt.seed = 7;
    opt.with_properties = false;

    const auto t0 = std::chrono::steady_clock::now();
    const auto results = wbm::run_verification(opt);
    const auto t1 = std::chrono::steady_clock::now();

    int failures = 0;
    for (const auto& r : results) {
        if (!r.pass)
            ++failures;
        std::printf("[%s] %2d. %s  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.pass ? "" : r.witness.dump().c_str());
    }
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("%zu criteria, %d failed (%.2f s)\n", results.size(), failures, secs);
    return failures == 0 ? 0 : 1;
}
