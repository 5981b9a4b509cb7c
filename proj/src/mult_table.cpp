#include "a2/cses.hpp"
#include "a2/multiplicity.hpp"

#include <array>

namespace a2 {

namespace {

// Rows are (x, y, a, b, constant); inequality rows are integral, the
// multiplicity expressions are thirds and carried as numerators over 3.
struct TableRow {
    std::vector<std::array<int, 5>> ineqs;
    std::array<int, 5> expr_num;  // expression = expr_num / 3
};

LinearForm form_of(const std::array<int, 5>& row, int denom) {
    LinearForm f(4);
    for (size_t i = 0; i < 4; ++i) f.coeffs[i] = Rat(row[i], denom);
    f.constant = Rat(row[4], denom);
    return f;
}

ConeSupportedExpressionSet build_table() {
    const Ambient vars = {"x", "y", "a", "b"};
    const std::vector<TableRow> rows = {
        {{{1, -1, -1, 1, 0}, {1, 2, -1, 1, 0}, {2, 1, -2, -1, -3}}, {0, 0, 0, 0, 0}},
        {{{-1, 1, 1, -1, 0}, {2, 1, 1, -1, 0}, {1, 2, -1, -2, -3}}, {0, 0, 0, 0, 0}},
        {{{-2, -1, -1, 1, 0}, {1, 2, -1, 1, 0}, {-1, 1, -2, -1, -3}}, {0, 0, 0, 0, 0}},
        {{{-1, 1, 1, -1, 0}, {-1, -2, 1, -1, 0}, {-2, -1, -1, -2, -3}}, {0, 0, 0, 0, 0}},
        {{{1, -1, -1, 1, 0}, {-2, -1, -1, 1, 0}, {-1, -2, -2, -1, -3}}, {0, 0, 0, 0, 0}},
        {{{2, 1, 1, -1, 0}, {-1, -2, 1, -1, 0}, {1, -1, -1, -2, -3}}, {0, 0, 0, 0, 0}},
        {{{1, -1, -1, 1, 0}, {1, 2, -1, 1, 0}, {-2, -1, 2, 1, 3}, {2, 1, 1, -1, 0}},
         {-2, -1, 2, 1, 3}},
        {{{-1, 1, 1, -1, 0}, {2, 1, 1, -1, 0}, {1, 2, -1, 1, 0}, {-1, -2, 1, 2, 3}},
         {-1, -2, 1, 2, 3}},
        {{{-2, -1, -1, 1, 0}, {1, 2, -1, 1, 0}, {1, -1, 2, 1, 3}, {-1, 1, 1, -1, 0}},
         {1, -1, 2, 1, 3}},
        {{{-1, 1, 1, -1, 0}, {-2, -1, -1, 1, 0}, {-1, -2, 1, -1, 0}, {2, 1, 1, 2, 3}},
         {2, 1, 1, 2, 3}},
        {{{1, -1, -1, 1, 0}, {-2, -1, -1, 1, 0}, {1, 2, 2, 1, 3}, {-1, -2, 1, -1, 0}},
         {1, 2, 2, 1, 3}},
        {{{1, -1, -1, 1, 0}, {2, 1, 1, -1, 0}, {-1, -2, 1, -1, 0}, {-1, 1, 1, 2, 3}},
         {-1, 1, 1, 2, 3}},
        {{{-1, 1, 1, -1, 0}, {2, 1, 1, -1, 0}, {-1, -2, 1, -1, 0}, {0, 0, 1, -1, 0}},
         {0, 0, 0, 3, 3}},
        {{{1, -1, -1, 1, 0}, {1, 2, -1, 1, 0}, {-2, -1, -1, 1, 0}, {0, 0, -1, 1, 0}},
         {0, 0, 3, 0, 3}},
    };
    // The 14 cones tile the half-space of dominant lambda; for a or b
    // negative the outer zero wedges overlap, so the declared domain is
    // {a >= 0, b >= 0}.
    Cone domain = whole_space(vars);
    domain.ineqs.push_back(LinearForm::variable(4, 2));
    domain.ineqs.push_back(LinearForm::variable(4, 3));
    ConeSupportedExpressionSet s{vars, domain, {}};
    for (const TableRow& row : rows) {
        Cone c{vars, {}};
        for (const auto& iq : row.ineqs) c.ineqs.push_back(form_of(iq, 1));
        s.pieces.push_back({std::move(c), form_of(row.expr_num, 3)});
    }
    return s;
}

}  // namespace

const ConeSupportedExpressionSet& mult_piecewise_table() {
    static const ConeSupportedExpressionSet table = build_table();
    return table;
}

}  // namespace a2
