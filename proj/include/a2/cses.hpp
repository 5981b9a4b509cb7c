#pragma once

#include "a2/cone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace a2 {

// One piece of a piecewise-linear function: an expression valid on a
// full-dimensional cone.
struct ConeSupportedExpression {
    Cone cone;
    LinearForm expr;
};

// A piecewise-linear function on a declared domain cone: pieces are
// full-dimensional, pairwise interior-disjoint, cover the domain, and
// adjacent expressions agree on shared walls.
struct ConeSupportedExpressionSet {
    Ambient vars;
    Cone domain;
    std::vector<ConeSupportedExpression> pieces;

    size_t nonzero_count() const;
    size_t zero_count() const { return pieces.size() - nonzero_count(); }
};

// The constant function on a domain, as a single piece.
ConeSupportedExpressionSet cses_constant(const Cone& domain, const Rat& value);

// Common refinement carrying the sum; lower-dimensional intersections
// are dropped (continuity keeps wall evaluations correct).
ConeSupportedExpressionSet cses_add(const ConeSupportedExpressionSet& s1,
                                    const ConeSupportedExpressionSet& s2);

ConeSupportedExpressionSet cses_scale(const ConeSupportedExpressionSet& s, const Rat& k);

// Greedily merges equal-expression pieces with convex union, pairs in
// lexicographic order of the canonical cone serialization, restarting
// after every merge, until a fixed point.
ConeSupportedExpressionSet cses_simplify(const ConeSupportedExpressionSet& s);

// Substitutes sub[i] (a form over the target variables) for source
// variable i in every inequality and expression, clips each piece to
// the target domain and keeps the full-dimensional ones.  The image of
// the target domain must lie inside the source domain.
ConeSupportedExpressionSet pullback(const ConeSupportedExpressionSet& s,
                                    const std::vector<LinearForm>& sub, const Ambient& target_vars,
                                    const Cone& target_domain);

// Value at a point of the domain; any containing piece will do since
// the function is continuous.  Throws outside the domain.
Rat evaluate(const ConeSupportedExpressionSet& s, std::span<const Rat> p);

// Checks the partition assumptions exactly: full-dimensional pieces,
// pairwise interior-disjoint, domain coverage, and wall continuity.
// Returns a description of the first violation, or nullopt.
std::optional<std::string> validate(const ConeSupportedExpressionSet& s);

}  // namespace a2
