#include "a2/cses.hpp"

#include "a2/multiplicity.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace a2;

namespace {

const Ambient kXY = {"x", "y"};

LinearForm row2(int cx, int cy, int k) {
    LinearForm f(2);
    f.coeffs[0] = cx;
    f.coeffs[1] = cy;
    f.constant = k;
    return f;
}

Cone cone2(std::initializer_list<std::array<int, 3>> rows) {
    Cone c{kXY, {}};
    for (const auto& r : rows) c.ineqs.push_back(row2(r[0], r[1], r[2]));
    return c;
}

std::vector<Rat> table_point(int x, int y, int a, int b) {
    return {Rat(x), Rat(y), Rat(a), Rat(b)};
}

// |x| on the plane: two pieces split at x = 0.
ConeSupportedExpressionSet abs_x() {
    ConeSupportedExpressionSet s{kXY, whole_space(kXY), {}};
    s.pieces.push_back({cone2({{1, 0, 0}}), row2(1, 0, 0)});
    s.pieces.push_back({cone2({{-1, 0, 0}}), row2(-1, 0, 0)});
    return s;
}

std::vector<Rat> random_plane_point(testing::Rng& rng) {
    return {rng.rational(-8, 8), rng.rational(-8, 8)};
}

}  // namespace

TEST_CASE("the multiplicity table is a valid partition of its domain") {
    CHECK(validate(mult_piecewise_table()) == std::nullopt);
}

TEST_CASE("constant sets and additive identity") {
    auto zero = cses_constant(whole_space(kXY), Rat(0));
    CHECK(validate(zero) == std::nullopt);
    auto s = abs_x();
    CHECK(validate(s) == std::nullopt);
    auto sum = cses_add(s, zero);
    testing::Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        auto p = random_plane_point(rng);
        CHECK(evaluate(sum, p) == evaluate(s, p));
    }
}

TEST_CASE("scaling twice by -1 is the identity") {
    auto s = abs_x();
    auto back = cses_scale(cses_scale(s, Rat(-1)), Rat(-1));
    testing::Rng rng(72);
    for (int i = 0; i < 200; ++i) {
        auto p = random_plane_point(rng);
        CHECK(evaluate(back, p) == evaluate(s, p));
    }
}

TEST_CASE("adding the table to itself doubles pointwise") {
    const auto& table = mult_piecewise_table();
    auto doubled = cses_add(table, table);
    CHECK(evaluate(doubled, table_point(0, 0, 1, 1)) == Rat(4));
    CHECK(evaluate(table, table_point(0, 0, 1, 1)) == Rat(2));
    testing::Rng rng(73);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rat> p{rng.rational(-6, 6), rng.rational(-6, 6), rng.rational(0, 6),
                           rng.rational(0, 6)};
        CHECK(evaluate(doubled, p) == 2 * evaluate(table, p));
    }
}

TEST_CASE("addition is pointwise correct on refinements") {
    auto s = abs_x();
    // g = x, a single global piece.
    ConeSupportedExpressionSet g{kXY, whole_space(kXY), {}};
    g.pieces.push_back({whole_space(kXY), row2(1, 0, 0)});
    auto sum = cses_add(s, g);
    CHECK(validate(sum) == std::nullopt);
    testing::Rng rng(74);
    for (int i = 0; i < 300; ++i) {
        auto p = random_plane_point(rng);
        CHECK(evaluate(sum, p) == evaluate(s, p) + evaluate(g, p));
    }
}

namespace {

void check_same_pieces(const ConeSupportedExpressionSet& a, const ConeSupportedExpressionSet& b) {
    REQUIRE(a.pieces.size() == b.pieces.size());
    for (size_t i = 0; i < a.pieces.size(); ++i) {
        CHECK(canonical_rows(a.pieces[i].cone) == canonical_rows(b.pieces[i].cone));
        CHECK(a.pieces[i].expr == b.pieces[i].expr);
    }
}

}  // namespace

TEST_CASE("addition is commutative and associative up to the canonical order") {
    auto s = abs_x();
    const auto glued = [] {  // |y|
        ConeSupportedExpressionSet t{kXY, whole_space(kXY), {}};
        t.pieces.push_back({cone2({{0, 1, 0}}), row2(0, 1, 0)});
        t.pieces.push_back({cone2({{0, -1, 0}}), row2(0, -1, 0)});
        return t;
    }();
    const auto wedge = [] {
        ConeSupportedExpressionSet t{kXY, whole_space(kXY), {}};
        t.pieces.push_back({cone2({{1, 1, 0}}), row2(2, 0, 1)});
        t.pieces.push_back({cone2({{-1, -1, 0}}), row2(0, -2, 1)});
        return t;
    }();
    check_same_pieces(cses_simplify(cses_add(s, glued)), cses_simplify(cses_add(glued, s)));
    check_same_pieces(cses_simplify(cses_add(cses_add(s, glued), wedge)),
                      cses_simplify(cses_add(s, cses_add(glued, wedge))));
}

TEST_CASE("simplify merges a needless split") {
    ConeSupportedExpressionSet s{kXY, whole_space(kXY), {}};
    s.pieces.push_back({cone2({{1, 0, 0}}), row2(0, 1, 3)});
    s.pieces.push_back({cone2({{-1, 0, 0}}), row2(0, 1, 3)});
    auto simplified = cses_simplify(s);
    REQUIRE(simplified.pieces.size() == 1);
    CHECK(simplified.pieces[0].expr == row2(0, 1, 3));
    CHECK(validate(simplified) == std::nullopt);

    // An already-minimal set is untouched.
    auto again = cses_simplify(simplified);
    CHECK(again.pieces.size() == 1);
    auto abs_unchanged = cses_simplify(abs_x());
    CHECK(abs_unchanged.pieces.size() == 2);
}

TEST_CASE("pullback by the identity restricts to the domain") {
    const auto& table = mult_piecewise_table();
    std::vector<LinearForm> id;
    for (size_t i = 0; i < 4; ++i) id.push_back(LinearForm::variable(4, i));
    // restrict to dominant (a, b)
    Cone dom = whole_space(table.vars);
    dom.ineqs.push_back(LinearForm::variable(4, 2));
    dom.ineqs.push_back(LinearForm::variable(4, 3));
    auto restricted = pullback(table, id, table.vars, dom);
    CHECK(validate(restricted) == std::nullopt);
    testing::Rng rng(75);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> p{rng.rational(-6, 6), rng.rational(-6, 6), rng.rational(0, 6),
                           rng.rational(0, 6)};
        CHECK(evaluate(restricted, p) == evaluate(table, p));
    }
}

TEST_CASE("pullback by a constant map yields one piece over the domain") {
    const auto& table = mult_piecewise_table();
    // (1,0) sits strictly inside the b+1 triangle of lambda = (6,2).
    std::vector<LinearForm> constant;
    for (int v : {1, 0, 6, 2}) constant.push_back(LinearForm::constant_form(2, Rat(v)));
    auto pulled = pullback(table, constant, kXY, whole_space(kXY));
    REQUIRE(pulled.pieces.size() == 1);
    testing::Rng rng(76);
    CHECK(evaluate(pulled, random_plane_point(rng)) == Rat(3));
    CHECK(validate(pulled) == std::nullopt);
}

TEST_CASE("evaluate rejects points outside the domain") {
    Cone dom = cone2({{1, 0, 0}});  // x >= 0
    auto s = cses_constant(dom, Rat(5));
    CHECK(evaluate(s, std::vector<Rat>{Rat(2), Rat(-1)}) == Rat(5));
    CHECK_THROWS_AS(evaluate(s, std::vector<Rat>{Rat(-2), Rat(0)}), std::domain_error);
}

TEST_CASE("mismatched operands are rejected") {
    auto s = abs_x();
    auto other = cses_constant(cone2({{1, 0, 0}}), Rat(0));
    CHECK_THROWS_AS(cses_add(s, other), std::invalid_argument);
}

TEST_CASE("validate reports broken partitions") {
    // Overlap.
    ConeSupportedExpressionSet overlap{kXY, whole_space(kXY), {}};
    overlap.pieces.push_back({whole_space(kXY), row2(0, 0, 0)});
    overlap.pieces.push_back({cone2({{1, 0, 0}}), row2(0, 0, 0)});
    CHECK(validate(overlap) != std::nullopt);

    // Gap.
    ConeSupportedExpressionSet gap{kXY, whole_space(kXY), {}};
    gap.pieces.push_back({cone2({{1, 0, -1}}), row2(0, 0, 0)});
    gap.pieces.push_back({cone2({{-1, 0, -1}}), row2(0, 0, 0)});
    CHECK(validate(gap) != std::nullopt);

    // Discontinuity across x = 0.
    ConeSupportedExpressionSet jump{kXY, whole_space(kXY), {}};
    jump.pieces.push_back({cone2({{1, 0, 0}}), row2(0, 0, 0)});
    jump.pieces.push_back({cone2({{-1, 0, 0}}), row2(0, 0, 1)});
    CHECK(validate(jump) != std::nullopt);

    // Lower-dimensional piece.
    ConeSupportedExpressionSet thin{kXY, whole_space(kXY), {}};
    thin.pieces.push_back({whole_space(kXY), row2(0, 0, 0)});
    thin.pieces.push_back({cone2({{1, 0, 0}, {-1, 0, 0}}), row2(0, 0, 0)});
    CHECK(validate(thin) != std::nullopt);
}
