// Acceptance gate: runs the numbered verification criteria and prints one
// PASS/FAIL line per criterion.  Exit status is nonzero iff any selected
// criterion fails, so each criterion can be wired up as its own test.
//
// Usage: ngonstar_acceptance [--criterion N] [--seed S]
//   --criterion N   run only criterion N (1..10); default: run all ten
//   --seed S        base seed for randomized checks (default 7)

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ngonstar/verify.hpp"

int main(int argc, char** argv) {
    int criterion = 0;  // 0 = all
    std::uint64_t seed = 7;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            criterion = std::atoi(argv[++i]);
        } else if (arg == "--seed" && i + 1 < argc) {
            seed = static_cast<std::uint64_t>(std::strtoull(argv[++i], nullptr, 10));
        } else {
            std::cerr << "usage: ngonstar_acceptance [--criterion N] [--seed S]\n";
            return 2;
        }
    }
    if (criterion < 0 || criterion > 10) {
        std::cerr << "error: criterion must be in 1..10\n";
        return 2;
    }

    std::vector<int> selected;
    if (criterion == 0) {
        for (int c = 1; c <= 10; ++c) selected.push_back(c);
    } else {
        selected.push_back(criterion);
    }

    bool all_pass = true;
    for (int c : selected) {
        const ngonstar::CheckLine line = ngonstar::run_criterion(c, seed);
        std::cout << ngonstar::render_check_line(line) << "\n";
        if (!line.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
