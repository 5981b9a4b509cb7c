#pragma once

#include "a2/tensor.hpp"
#include "a2/weight.hpp"

#include <vector>

namespace a2 {

struct FusionQuery {
    Weight lambda;
    Weight mu;
    Weight nu;
    Level level;
};

enum class FusionMode {
    folding,  // Kac-Walton verbatim: fold every translated diagram weight
    alcoves,  // sum sgn(w) m_lambda(w.nu - mu) over the 13 contributing alcoves
};

// The 13 affine Weyl words whose alcoves can carry diagram mass, in the
// order { s0s2s0, s0s1s0, s1s2s1, s0s2, s0s1, s2s0, s1s0, s2s1, s1s2,
// s0, s2, s1, Id }.
const std::vector<WeylWord>& contributing_alcoves();

Int fusion_coefficient(const FusionQuery& q, FusionMode mode = FusionMode::alcoves);

CoefficientTable fusion_decomposition(const Weight& lambda, const Weight& mu, const Level& ell,
                                      FusionMode mode = FusionMode::folding);

}  // namespace a2
