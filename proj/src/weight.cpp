#include "a2/weight.hpp"

#include <ostream>
#include <stdexcept>

namespace a2 {

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    return os << "(" << w.x << "," << w.y << ")";
}

Level::Level(Int v) : value(std::move(v)) {
    if (value < 0) throw std::invalid_argument("level must be nonnegative");
}

WeylWord::WeylWord(std::vector<int> ls) : letters(std::move(ls)) {
    for (int g : letters)
        if (g < 0 || g > 2) throw std::invalid_argument("generator index must be 0, 1 or 2");
}

std::string WeylWord::str() const {
    if (letters.empty()) return "Id";
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ".";
        s += "s";
        s += static_cast<char>('0' + letters[i]);
    }
    return s;
}

Rat killing_form(const Weight& v, const Weight& w) {
    Rat n(2 * v.x * w.x + v.x * w.y + v.y * w.x + 2 * v.y * w.y);
    return n / 3;
}

Rat killing_form(const RatWeight& v, const RatWeight& w) {
    return (2 * v.x * w.x + v.x * w.y + v.y * w.x + 2 * v.y * w.y) / 3;
}

Weight apply_simple_reflection(int i, const Weight& phi) {
    switch (i) {
        case 1: return {-phi.x, phi.x + phi.y};
        case 2: return {phi.x + phi.y, -phi.y};
        default: throw std::invalid_argument("simple reflection index must be 1 or 2");
    }
}

bool is_dominant(const Weight& phi) { return phi.x >= 0 && phi.y >= 0; }

bool in_alcove(const Weight& phi, const Level& ell) {
    return is_dominant(phi) && phi.x + phi.y <= ell.value;
}

namespace {

// Unshifted affine reflection across (psi, theta) = L.
Weight affine_reflect(const Weight& psi, const Int& L) {
    Int t = L - psi.x - psi.y;
    return {psi.x + t, psi.y + t};
}

}  // namespace

Weight dot_action(const WeylWord& w, const Weight& phi, const Level& ell) {
    Int L = ell.value + 3;
    Weight psi = phi + rho();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        switch (*it) {
            case 1: psi = apply_simple_reflection(1, psi); break;
            case 2: psi = apply_simple_reflection(2, psi); break;
            case 0: psi = affine_reflect(psi, L); break;
        }
    }
    return psi - rho();
}

Weight dot_action_generator_formulas(const WeylWord& w, const Weight& phi, const Level& ell) {
    Weight p = phi;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        switch (*it) {
            case 1: p = {-p.x - 2, p.x + p.y + 1}; break;
            case 2: p = {p.x + p.y + 1, -p.y - 2}; break;
            case 0: {
                Int t = ell.value + 1 - p.x - p.y;
                p = {p.x + t, p.y + t};
                break;
            }
        }
    }
    return p;
}

std::optional<SignedWeight> fold_to_chamber(const Weight& phi, FoldPolicy policy) {
    Weight psi = phi + rho();
    int sign = 1;
    for (;;) {
        if (psi.x == 0 || psi.y == 0) return std::nullopt;
        // Both policies reduce to the same two walls here; order them anyway.
        bool try1first = (policy == FoldPolicy::s1_first);
        if (try1first ? psi.x < 0 : psi.y < 0) {
            psi = apply_simple_reflection(try1first ? 1 : 2, psi);
            sign = -sign;
        } else if (try1first ? psi.y < 0 : psi.x < 0) {
            psi = apply_simple_reflection(try1first ? 2 : 1, psi);
            sign = -sign;
        } else {
            return SignedWeight{psi - rho(), sign};
        }
    }
}

std::optional<SignedWeight> fold_to_alcove(const Weight& phi, const Level& ell,
                                           FoldPolicy policy) {
    const Int L = ell.value + 3;
    Weight psi = phi + rho();
    int sign = 1;
    for (;;) {
        if (psi.x == 0 || psi.y == 0 || psi.x + psi.y == L) return std::nullopt;
        int wall = -1;  // which reflection to apply: 1, 2 or 0
        if (policy == FoldPolicy::s1_first) {
            if (psi.x < 0) wall = 1;
            else if (psi.y < 0) wall = 2;
            else if (psi.x + psi.y > L) wall = 0;
        } else {
            if (psi.x + psi.y > L) wall = 0;
            else if (psi.y < 0) wall = 2;
            else if (psi.x < 0) wall = 1;
        }
        if (wall < 0) return SignedWeight{psi - rho(), sign};
        psi = (wall == 0) ? affine_reflect(psi, L) : apply_simple_reflection(wall, psi);
        sign = -sign;
    }
}

Weight fold_dominant_plain(const Weight& phi) {
    Weight p = phi;
    for (;;) {
        if (p.x < 0) p = apply_simple_reflection(1, p);
        else if (p.y < 0) p = apply_simple_reflection(2, p);
        else return p;
    }
}

}  // namespace a2
