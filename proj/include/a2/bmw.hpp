#pragma once

#include "a2/weight.hpp"

namespace a2 {

// Intermediates of the Begin-Mathieu-Walton closed formula.  All values
// are exact rationals; delta is 1 iff k0max >= k0min and A, B are
// nonnegative integers.
struct BmwIntermediates {
    Rat A;
    Rat B;
    Rat k0min;
    Rat k0max;
    Rat l0max;
    int delta;
};

BmwIntermediates bmw_intermediates(const Weight& lambda, const Weight& mu, const Weight& nu,
                                   const Level& ell);

// Tensor coefficient (k0max - k0min + 1) * delta; level-independent.
Int bmw_tensor(const Weight& lambda, const Weight& mu, const Weight& nu);

// Fusion coefficient via the G form: l0max - k0min + 1 when that is
// nonnegative and A, B are integers, else 0.
Int bmw_fusion(const Weight& lambda, const Weight& mu, const Weight& nu, const Level& ell);

}  // namespace a2
