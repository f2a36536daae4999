// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure.

#include <cstdio>

#include "tgl/acceptance.hpp"

int main() {
    const auto results = tgl::acceptance::run_all();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%s %2d  %-45s (%6.2fs, budget %5.0fs)  %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.budget_seconds, r.pass ? "" : r.detail.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: CRITERIA FAILED");
    return all ? 0 : 1;
}
