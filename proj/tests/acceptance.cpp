// Acceptance suite runner: one line per criterion, nonzero exit on failure.
#include <cstdlib>
#include <iostream>
#include <string>

#include "symdet/selftest.hpp"

int main(int argc, char** argv) {
    symdet::selftest::SelftestOptions opts;
    opts.threads = 2;
    opts.log = &std::cout;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) opts.threads = std::atoi(argv[++i]);
        if (arg == "--seed" && i + 1 < argc)
            opts.seed = static_cast<std::uint64_t>(std::atoll(argv[++i]));
    }
    const auto report = symdet::selftest::run_acceptance_suite(opts);
    std::cout << (report.all_passed() ? "acceptance: all criteria passed"
                                      : "acceptance: FAILED criteria present")
              << "\n";
    return report.all_passed() ? 0 : 1;
}
