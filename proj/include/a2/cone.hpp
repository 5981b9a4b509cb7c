#pragma once

#include "a2/linear_form.hpp"

#include <optional>
#include <span>
#include <vector>

namespace a2 {

// A polyhedron in H-representation: every listed form is constrained
// >= 0.  Affine constants are allowed (shifted cones), and
// rows may be redundant until reduce() is called.
struct Cone {
    Ambient vars;
    std::vector<LinearForm> ineqs;

    size_t dim() const { return vars.size(); }
};

Cone whole_space(Ambient vars);

// Concatenation of inequality lists; throws on ambient mismatch.
Cone intersect(const Cone& c1, const Cone& c2);

bool is_empty(const Cone& c);

// True iff all inequalities can hold strictly at once; decided exactly
// by Fourier-Motzkin elimination.
bool is_full_dimensional(const Cone& c);

// Solution-set containment / equality.
bool is_subset(const Cone& inner, const Cone& outer);
bool same_solution_set(const Cone& a, const Cone& b);

bool contains_point(const Cone& c, std::span<const Rat> p);

// Irredundant H-representation with primitive-integer rows in canonical
// order.  Throws on an empty cone.
Cone reduce(const Cone& c);

// A rational point with every inequality strictly positive, when one
// exists.
std::optional<std::vector<Rat>> interior_point(const Cone& c);

// Rows of c that vanish identically on c (the affine hull's equations).
std::vector<LinearForm> implicit_equalities(const Cone& c);

// A point of `region` outside every cone of `cover`, or nullopt when
// region is covered.  Decided exactly by recursive case analysis over
// violated inequalities.
std::optional<std::vector<Rat>> uncovered_point(const Cone& region,
                                                const std::vector<Cone>& cover);

// Union convexity via the common-inequality envelope: the union is
// convex iff the envelope has no point outside the union, and the
// envelope is then exactly the convex hull.
std::optional<Cone> hull_if_union_convex(const std::vector<Cone>& cones);
bool is_union_convex(const std::vector<Cone>& cones);

// Primitive rows, deduplicated and sorted; the canonical serialization
// of the representation (not of the solution set).
std::vector<std::vector<Int>> canonical_rows(const Cone& c);
bool canonical_less(const Cone& a, const Cone& b);

}  // namespace a2
