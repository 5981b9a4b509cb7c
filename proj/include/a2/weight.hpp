#pragma once

#include "a2/numeric.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace a2 {

// A weight x*w1 + y*w2 in the fundamental-weight basis of A2.  Arbitrary
// integers are allowed; weights outside the dominant chamber occur
// constantly during folding.
struct Weight {
    Int x;
    Int y;

    Weight() : x(0), y(0) {}
    Weight(Int xx, Int yy) : x(std::move(xx)), y(std::move(yy)) {}

    friend Weight operator+(const Weight& a, const Weight& b) { return {a.x + b.x, a.y + b.y}; }
    friend Weight operator-(const Weight& a, const Weight& b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(const Weight& a, const Weight& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    // Lexicographic; used for map keys and all sorted serialization.
    friend bool operator<(const Weight& a, const Weight& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// rho = w1 + w2; also the highest root theta = alpha1 + alpha2 = (1,1).
inline const Weight& rho() {
    static const Weight r{1, 1};
    return r;
}
inline const Weight& highest_root() { return rho(); }
inline const Weight& alpha1() {
    static const Weight a{2, -1};
    return a;
}
inline const Weight& alpha2() {
    static const Weight a{-1, 2};
    return a;
}

// A fusion level; nonnegative by construction.
struct Level {
    Int value;
    explicit Level(Int v);
};

// A word in the affine Weyl generators {s0, s1, s2}.  letters.front()
// acts last: the word s0 s2 applies s2 first, then s0.
struct WeylWord {
    std::vector<int> letters;

    WeylWord() = default;
    explicit WeylWord(std::vector<int> ls);

    static WeylWord identity() { return WeylWord{}; }
    int sign() const { return letters.size() % 2 == 0 ? 1 : -1; }
    std::string str() const;  // e.g. "s0.s2.s0", "Id"

    friend bool operator==(const WeylWord& a, const WeylWord& b) { return a.letters == b.letters; }
};

// Killing form in omega-coordinates, normalized so (theta, theta) = 2:
// (v, w) = (2 vx wx + vx wy + vy wx + 2 vy wy) / 3.
Rat killing_form(const Weight& v, const Weight& w);

struct RatWeight {
    Rat x;
    Rat y;
};
Rat killing_form(const RatWeight& v, const RatWeight& w);

// Plain (unshifted) simple reflection, i in {1,2}:
//   s1(x,y) = (-x, x+y),  s2(x,y) = (x+y, -y).
Weight apply_simple_reflection(int i, const Weight& phi);

bool is_dominant(const Weight& phi);
bool in_alcove(const Weight& phi, const Level& ell);

// Shifted (dot) action w.phi = w(phi+rho) - rho, with the affine group
// acting unshifted at level ell+3: s0(psi) = psi + (ell+3 - (psi,theta)) theta.
Weight dot_action(const WeylWord& w, const Weight& phi, const Level& ell);

// Same action computed from the closed per-generator dot formulas
//   s1.(x,y) = (-x-2, x+y+1), s2.(x,y) = (x+y+1, -y-2),
//   s0.(x,y) = (x+t, y+t) with t = ell+1-x-y.
// Kept as an independent cross-check of dot_action.
Weight dot_action_generator_formulas(const WeylWord& w, const Weight& phi, const Level& ell);

struct SignedWeight {
    Weight weight;
    int sign;
};

// Order in which violated walls are tried; folding results must not
// depend on the choice (tested, not assumed).
enum class FoldPolicy { s1_first, s0_first };

// Folds phi under the dot action of the finite Weyl group.  Returns the
// dominant representative and sgn(w), or nullopt when phi+rho lies on a
// reflection wall (the weight then contributes nothing).
std::optional<SignedWeight> fold_to_chamber(const Weight& phi,
                                            FoldPolicy policy = FoldPolicy::s1_first);

// Same under the affine Weyl group at level ell: folds into the alcove
// P_ell, or nullopt when phi+rho lies on any affine wall.
std::optional<SignedWeight> fold_to_alcove(const Weight& phi, const Level& ell,
                                           FoldPolicy policy = FoldPolicy::s1_first);

// Plain W-folding to the dominant chamber (no shift, no sign); weight
// diagrams are W-symmetric so this is all mult() needs.
Weight fold_dominant_plain(const Weight& phi);

}  // namespace a2
