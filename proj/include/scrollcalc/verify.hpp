#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scrollcalc/integer.hpp"

namespace scrollcalc::verify {

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

struct Check {
    std::string id;
    std::string claim;     // what is cross-checked, in plain terms
    Status status = Status::skipped;
    std::string expected;
    std::string actual;
    std::string note;      // documented quirks, negative-control marker
    long long millis = 0;
};

struct GridRange {
    Integer lo;
    Integer hi;
};

struct Options {
    std::uint64_t seed = 0;
    int trials = 5;
    Integer coeff_bound = 100;
    // Optional restrictions, intersected with each check's own grid.
    std::optional<GridRange> grid_b;
    std::optional<GridRange> grid_k;
    // Perturbs one expected constant by +1; a healthy build must then fail.
    bool negative_control = false;
};

struct Report {
    std::vector<Check> checks;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    std::uint64_t seed = 0;

    bool all_passed() const { return failed == 0 && passed > 0; }
};

// Runs the whole cross-validation suite: golden table rows, the chi(N)
// triple identity, closed forms against exact cohomology, Serre duality and
// Riemann-Roch sweeps, generic nonspeciality and balanced splitting through
// the coboundary oracle, cup-product rank statements, the component
// dimension identity, and the quadric-base examples.
Report run_all(const Options& options = {});

}  // namespace scrollcalc::verify
