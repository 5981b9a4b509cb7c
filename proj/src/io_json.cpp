#include "a2/io_json.hpp"

#include <limits>

namespace a2 {

using nlohmann::json;

json json_of(const Int& v) {
    static const Int lo(std::numeric_limits<std::int64_t>::min());
    static const Int hi(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

json json_of(const Rat& v) {
    if (is_integer(v)) return json_of(numerator(v));
    return to_string(v);
}

json json_of(const WeightDiagram& wd) {
    json out = json::array();
    for (const auto& [w, m] : wd.entries)
        out.push_back({{"weight", {json_of(w.x), json_of(w.y)}}, {"mult", json_of(m)}});
    return out;
}

json json_of(const CoefficientTable& table) {
    json out = json::array();
    for (const auto& [nu, n] : table.entries)
        out.push_back({{"nu", {json_of(nu.x), json_of(nu.y)}}, {"N", json_of(n)}});
    return out;
}

json fusion_json(const CoefficientTable& table, const Level& ell) {
    return {{"level", json_of(ell.value)}, {"entries", json_of(table)}};
}

namespace {

json row_of(const LinearForm& f) {
    json row = json::array();
    for (const Rat& c : f.coeffs) row.push_back(json_of(c));
    row.push_back(json_of(f.constant));
    return row;
}

json rows_of(const Cone& c) {
    json rows = json::array();
    for (const LinearForm& f : c.ineqs) rows.push_back(row_of(f));
    return rows;
}

}  // namespace

json json_of(const ConeSupportedExpressionSet& s) {
    json pieces = json::array();
    for (const auto& p : s.pieces)
        pieces.push_back({{"cone", rows_of(p.cone)}, {"expr", row_of(p.expr)}});
    return {{"variables", s.vars}, {"domain", rows_of(s.domain)}, {"pieces", pieces}};
}

json explain_json(const BmwIntermediates& r, const Int& coefficient) {
    return {{"A", json_of(r.A)},         {"B", json_of(r.B)},       {"k0min", json_of(r.k0min)},
            {"k0max", json_of(r.k0max)}, {"l0max", json_of(r.l0max)}, {"delta", r.delta},
            {"N", json_of(coefficient)}};
}

}  // namespace a2
