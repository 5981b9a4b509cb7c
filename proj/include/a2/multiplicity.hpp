#pragma once

#include "a2/weight.hpp"

#include <map>

namespace a2 {

struct ConeSupportedExpressionSet;  // see a2/cses.hpp

// The weight diagram of an irreducible module V(lambda): every weight
// with its multiplicity.  Keys run over the whole W-orbit, not just the
// dominant chamber.
struct WeightDiagram {
    std::map<Weight, Int> entries;

    Int multiplicity(const Weight& phi) const {
        auto it = entries.find(phi);
        return it == entries.end() ? Int(0) : it->second;
    }
    Int total_multiplicity() const;
};

// dim V(a,b) = (a+1)(b+1)(a+b+2)/2.
Int weyl_dimension(const Weight& lambda);

// Closed multiplicity formula for dominant lambda=(a,b), phi=(x,y):
//   max{0, min{(a+2b-x-2y)/3+1, (2a+b-2x-y)/3+1, a+1, b+1}}.
// Weights off the root-lattice class of lambda get 0.
Int mult_dominant(const Weight& lambda, const Weight& phi);

// Multiplicity of an arbitrary phi: fold with the plain Weyl action,
// then apply mult_dominant.
Int mult(const Weight& lambda, const Weight& phi);

// Full weight diagram, enumerated over lambda - i*alpha1 - j*alpha2 for
// 0 <= i,j <= a+b and filtered by nonzero multiplicity.
WeightDiagram weight_diagram(const Weight& lambda);

// Freudenthal's recursion, used as an independent oracle for the closed
// formula.  Computes the whole diagram of lambda (memo is local).
std::map<Weight, Int> freudenthal_diagram(const Weight& lambda);
Int mult_freudenthal(const Weight& lambda, const Weight& phi);

// The 14-piece piecewise-linear multiplicity table over variables
// (x, y, a, b), transcribed row for row.  Valid at every lattice point
// with dominant (a,b) and x+2y = a+2b mod 3.
const ConeSupportedExpressionSet& mult_piecewise_table();

}  // namespace a2
