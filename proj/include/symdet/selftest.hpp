#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symdet/rational.hpp"

namespace symdet::selftest {

struct SelftestOptions {
    std::uint64_t seed = 0;
    int threads = 1;
    std::ostream* log = nullptr; // one line per criterion when set
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelftestReport {
    std::vector<CriterionResult> criteria;
    bool all_passed() const;
};

// Runs every acceptance criterion at its pinned tolerance; each prints one
// pass/fail line. Exit-status users: all_passed() decides.
SelftestReport run_acceptance_suite(const SelftestOptions& opts = {});

// Independent oracle: classical determinant by cofactor expansion.
Rational classical_det_cofactor(const std::vector<std::vector<Rational>>& a);

} // namespace symdet::selftest
