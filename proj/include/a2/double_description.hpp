#pragma once

#include "a2/cone.hpp"

#include <vector>

namespace a2 {

// V-representation of a polyhedron: conv(vertices) + cone(rays) + span(lines).
struct Generators {
    std::vector<std::vector<Rat>> vertices;
    std::vector<std::vector<Rat>> rays;
    std::vector<std::vector<Rat>> lines;
};

// H -> V by the double description method on the homogenization; exact.
Generators rays_and_lines(const Cone& c);

// V -> H by dualizing; equalities of lower-dimensional polyhedra come
// out as paired inequalities.
Cone cone_from_generators(const Ambient& vars, const Generators& g);

}  // namespace a2
