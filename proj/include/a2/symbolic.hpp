#pragma once

#include "a2/cses.hpp"
#include "a2/weight.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace a2 {

// Ambient of the symbolic fusion computation: lambda=(a,b), mu=(c,d),
// nu=(e,f) and the level l.
const Ambient& fusion_variables();

// The constraint cone: a..f >= 0, a+b <= l, c+d <= l, e+f <= l, l >= 0.
const Cone& fusion_domain();

// The affine map (x, y, a, b) <- (w.(e,f) - (c,d), a, b) as forms over
// (a..f, l); w must be one of the 13 contributing alcoves.
std::vector<LinearForm> alcove_substitution(const WeylWord& w);

struct AlcoveLogEntry {
    WeylWord word;
    int sign;
    size_t pulled_pieces;       // pieces of the pulled-back multiplicity table
    size_t accumulated_pieces;  // pieces after adding and simplifying
};

struct SymbolicFusionResult {
    ConeSupportedExpressionSet pieces;
    size_t nonzero_count = 0;
    size_t zero_count = 0;
    std::vector<AlcoveLogEntry> provenance;
};

using ProgressFn = std::function<void(const std::string&)>;

// Symbolically evaluates the Kac-Walton sum over the 13 contributing
// alcoves, simplifying after each signed addition.
SymbolicFusionResult symbolic_kac_walton(const ProgressFn& progress = {});

// The closed formula as a piecewise-linear function: one piece per
// choice of binding terms in k0min (9) and l0max (3), each cut by
// nonnegativity, plus zero pieces covering the remainder.
ConeSupportedExpressionSet bmw_symbolic();

// "k0min = a+b, l0max = A" for a nonzero closed-formula expression.
std::optional<std::string> bmw_expression_label(const LinearForm& expr);

struct PieceMatch {
    size_t left;   // index into the first set's pieces
    size_t right;  // index into the second set's pieces
};

struct EquivalenceWitness {
    Cone region;
    std::vector<Rat> point;
    LinearForm left_expr;
    LinearForm right_expr;
};

struct EquivalenceReport {
    bool equivalent = false;
    std::vector<PieceMatch> nonzero_matches;
    std::optional<EquivalenceWitness> witness;
};

// Pairwise full-dimensional overlaps must carry identical expressions;
// reports the first counterexample with an interior witness point.
EquivalenceReport compare_piecewise(const ConeSupportedExpressionSet& f,
                                    const ConeSupportedExpressionSet& g);

// Human-readable certificate: per nonzero Kac-Walton piece, its cone,
// expression and the matching closed-formula piece.
std::string proof_certificate(const SymbolicFusionResult& kw,
                              const ConeSupportedExpressionSet& bmw,
                              const EquivalenceReport& report);

}  // namespace a2
