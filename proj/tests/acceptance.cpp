// Acceptance suite: runs every criterion at full range and prints one
// pass/fail line per criterion. Exit status is the number of failures.

#include <cstdio>

#include "wg/cache.hpp"
#include "wg/verify.hpp"

int main(int argc, char** argv) {
    bool full = true;
    if (argc > 1 && std::string(argv[1]) == "--small") full = false;
    wg::cache::set_dir(".wg-cache");

    auto results = wg::run_acceptance(full);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s  #%-2d %-45s (%.2fs)  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures;
}
