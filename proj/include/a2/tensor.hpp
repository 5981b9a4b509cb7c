#pragma once

#include "a2/multiplicity.hpp"
#include "a2/weight.hpp"

#include <map>
#include <vector>

namespace a2 {

// Decomposition coefficients, tensor or fusion: nu -> N with N > 0.
struct CoefficientTable {
    std::map<Weight, Int> entries;

    Int coefficient(const Weight& nu) const {
        auto it = entries.find(nu);
        return it == entries.end() ? Int(0) : it->second;
    }
    friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
        return a.entries == b.entries;
    }
};

// The six elements of the finite Weyl group as reduced words.
const std::vector<WeylWord>& finite_weyl_words();

// N_{lambda mu}^nu = sum over W of sgn(w) * m_lambda(w.nu - mu).
Int tensor_coefficient(const Weight& lambda, const Weight& mu, const Weight& nu);

// Racah-Speiser: translate WD(lambda) by mu, fold each weight into the
// chamber with the dot action, accumulate signed multiplicities.
CoefficientTable tensor_decomposition(const Weight& lambda, const Weight& mu);

}  // namespace a2
