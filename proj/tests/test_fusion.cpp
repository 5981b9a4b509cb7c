#include "a2/fusion.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace a2;

namespace {

CoefficientTable table_of(std::initializer_list<std::pair<Weight, int>> entries) {
    CoefficientTable t;
    for (const auto& [w, n] : entries) t.entries.emplace(w, n);
    return t;
}

}  // namespace

TEST_CASE("the reference fusion decomposition of V(4,2) x V(3,1) at level 7") {
    CoefficientTable expected = table_of({
        {{0, 5}, 1}, {{1, 3}, 1}, {{1, 6}, 1}, {{2, 1}, 1}, {{4, 0}, 1},
        {{4, 3}, 1}, {{5, 1}, 1}, {{2, 4}, 2}, {{3, 2}, 2},
    });
    CHECK(fusion_decomposition(Weight{4, 2}, Weight{3, 1}, Level{7}) == expected);
    CHECK(fusion_decomposition(Weight{4, 2}, Weight{3, 1}, Level{7}, FusionMode::alcoves) ==
          expected);
}

TEST_CASE("fusion coefficients of the reference example") {
    CHECK(fusion_coefficient({Weight{4, 2}, Weight{3, 1}, Weight{2, 4}, Level{7}}) == 2);
    CHECK(fusion_coefficient({Weight{4, 2}, Weight{3, 1}, Weight{3, 5}, Level{7}}) == 0);
    CHECK(fusion_coefficient({Weight{2, 3}, Weight{0, 0}, Weight{2, 3}, Level{5}}) == 1);
}

TEST_CASE("level-1 truncation of the fundamental square") {
    CHECK(fusion_decomposition(Weight{1, 0}, Weight{1, 0}, Level{1}) ==
          table_of({{{0, 1}, 1}}));
}

TEST_CASE("large level reproduces the tensor decomposition") {
    CHECK(fusion_decomposition(Weight{4, 2}, Weight{3, 1}, Level{100}) ==
          tensor_decomposition(Weight{4, 2}, Weight{3, 1}));
}

TEST_CASE("contributing alcoves") {
    const auto& words = contributing_alcoves();
    REQUIRE(words.size() == 13);
    CHECK(words.front() == WeylWord{{0, 2, 0}});
    CHECK(words.front().sign() == -1);
    CHECK(words.back() == WeylWord::identity());
    CHECK(words.back().sign() == 1);
    std::vector<WeylWord> expected = {
        WeylWord{{0, 2, 0}}, WeylWord{{0, 1, 0}}, WeylWord{{1, 2, 1}}, WeylWord{{0, 2}},
        WeylWord{{0, 1}},    WeylWord{{2, 0}},    WeylWord{{1, 0}},    WeylWord{{2, 1}},
        WeylWord{{1, 2}},    WeylWord{{0}},       WeylWord{{2}},       WeylWord{{1}},
        WeylWord::identity()};
    CHECK(words == expected);
}

TEST_CASE("folding mode and alcove mode agree exhaustively at small levels") {
    for (Int l = 0; l <= 4; ++l) {
        Level ell{l};
        for (Int a = 0; a <= l; ++a)
            for (Int b = 0; a + b <= l; ++b)
                for (Int c = 0; c <= l; ++c)
                    for (Int d = 0; c + d <= l; ++d)
                        CHECK(fusion_decomposition(Weight{a, b}, Weight{c, d}, ell,
                                                   FusionMode::folding) ==
                              fusion_decomposition(Weight{a, b}, Weight{c, d}, ell,
                                                   FusionMode::alcoves));
    }
}

TEST_CASE("fusion is bounded by tensor and stabilizes") {
    testing::Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        Weight la = rng.dominant_weight(4), mu = rng.dominant_weight(4);
        Int threshold = la.x + la.y + mu.x + mu.y;
        CoefficientTable tensor = tensor_decomposition(la, mu);
        for (Int l = std::max(la.x + la.y, mu.x + mu.y); l <= threshold + 2; ++l) {
            CoefficientTable fusion = fusion_decomposition(la, mu, Level{l});
            for (const auto& [nu, n] : fusion.entries) CHECK(n <= tensor.coefficient(nu));
            if (l >= threshold) CHECK(fusion == tensor);
        }
    }
}

TEST_CASE("fusion mass is bounded by tensor mass, equality exactly at stabilization") {
    testing::Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        Weight la = rng.dominant_weight(4), mu = rng.dominant_weight(4);
        CoefficientTable tensor = tensor_decomposition(la, mu);
        Int product = weyl_dimension(la) * weyl_dimension(mu);
        Int lo = std::max(la.x + la.y, mu.x + mu.y);
        for (Int l = lo; l <= la.x + la.y + mu.x + mu.y + 1; ++l) {
            CoefficientTable fusion = fusion_decomposition(la, mu, Level{l});
            Int mass = 0;
            for (const auto& [nu, n] : fusion.entries) mass += n * weyl_dimension(nu);
            CHECK(mass <= product);
            CHECK((mass == product) == (fusion == tensor));
        }
    }
}

TEST_CASE("inputs outside the alcove are rejected") {
    CHECK_THROWS_AS(fusion_decomposition(Weight{3, 1}, Weight{1, 0}, Level{2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fusion_coefficient({Weight{1, 0}, Weight{-1, 0}, Weight{0, 0}, Level{3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fusion_coefficient({Weight{1, 0}, Weight{1, 0}, Weight{0, -1}, Level{1}}),
                    std::invalid_argument);
    // a dominant nu beyond the truncation has coefficient zero
    CHECK(fusion_coefficient({Weight{1, 0}, Weight{1, 0}, Weight{2, 0}, Level{1}}) == 0);
}
