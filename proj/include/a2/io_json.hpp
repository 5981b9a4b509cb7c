#pragma once

#include "a2/bmw.hpp"
#include "a2/cses.hpp"
#include "a2/multiplicity.hpp"
#include "a2/tensor.hpp"

#include <json.hpp>

namespace a2 {

// Integers become JSON numbers when they fit; rationals with a
// denominator become "p/q" strings.
nlohmann::json json_of(const Int& v);
nlohmann::json json_of(const Rat& v);

// [ {"weight": [x,y], "mult": m}, ... ] sorted lexicographically.
nlohmann::json json_of(const WeightDiagram& wd);

// [ {"nu": [e,f], "N": n}, ... ] sorted.
nlohmann::json json_of(const CoefficientTable& table);

// {"level": l, "entries": [...]}.
nlohmann::json fusion_json(const CoefficientTable& table, const Level& ell);

// {"variables": [...], "domain": [[row]...], "pieces": [{"cone": [[row]...],
//  "expr": [row]}]}, rows ordered coefficients-then-constant.
nlohmann::json json_of(const ConeSupportedExpressionSet& s);

// {A, B, k0min, k0max, l0max, delta, N}.
nlohmann::json explain_json(const BmwIntermediates& r, const Int& coefficient);

}  // namespace a2
