// Acceptance suite runner: executes every criterion at full scale, prints one
// PASS/FAIL line per criterion, exits nonzero if any fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "helly/suites.hpp"

int main(int argc, char** argv) {
    uint64_t seed = 20240101;
    helly::SuiteScale scale;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        if (arg == "--scale-percent" && i + 1 < argc) {
            scale.num = std::atoi(argv[++i]);
            scale.den = 100;
        }
    }

    std::vector<helly::CriterionResult> results = helly::run_acceptance(seed, scale);
    bool all_pass = true;
    long total_ms = 0;
    for (const helly::CriterionResult& r : results) {
        all_pass = all_pass && r.pass;
        total_ms += r.wall_ms;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << " — "
                  << r.detail << " (" << r.wall_ms << " ms)" << std::endl;
    }
    std::cout << (all_pass ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " (" << total_ms
              << " ms total)" << std::endl;
    return all_pass ? 0 : 1;
}
