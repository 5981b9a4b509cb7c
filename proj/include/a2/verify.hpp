#pragma once

#include "a2/weight.hpp"

#include <string>
#include <vector>

namespace a2 {

struct SweepMismatch {
    Int level;
    Weight lambda;
    Weight mu;
    Weight nu;
    std::string detail;
};

struct SweepResult {
    unsigned long long pairs = 0;
    unsigned long long triples = 0;
    std::vector<SweepMismatch> mode_mismatches;      // Kac-Walton folding vs 13-alcove sums
    std::vector<SweepMismatch> bmw_mismatches;       // Kac-Walton vs closed formula
    std::vector<SweepMismatch> property_mismatches;  // bounds, symmetry, congruence

    bool ok() const {
        return mode_mismatches.empty() && bmw_mismatches.empty() && property_mismatches.empty();
    }
};

// Exhaustive check of every (lambda, mu, nu) in P_l^3 for every level
// l <= max_level: folding mode == alcove mode == closed formula, fusion
// bounded by tensor, lambda<->mu and conjugation symmetry, and the
// support congruence.  Deterministic output for any job count.
SweepResult verify_sweep(const Int& max_level, int jobs = 1);

}  // namespace a2
