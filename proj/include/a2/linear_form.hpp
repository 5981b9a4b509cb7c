#pragma once

#include "a2/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace a2 {

// Names of the ambient coordinates.  Forms and cones over different
// ambient tuples never mix.
using Ambient = std::vector<std::string>;

// An affine-linear expression  c[0]*v0 + ... + c[n-1]*v(n-1) + k  with
// exact rational coefficients.
struct LinearForm {
    std::vector<Rat> coeffs;
    Rat constant;

    LinearForm() = default;
    explicit LinearForm(size_t nvars) : coeffs(nvars, Rat(0)), constant(0) {}
    LinearForm(std::vector<Rat> c, Rat k) : coeffs(std::move(c)), constant(std::move(k)) {}

    static LinearForm variable(size_t nvars, size_t index);
    static LinearForm constant_form(size_t nvars, Rat k);

    size_t nvars() const { return coeffs.size(); }
    bool is_zero() const;

    Rat operator()(std::span<const Rat> point) const;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    LinearForm& operator*=(const Rat& k);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(LinearForm a, const Rat& k) { return a *= k; }
    friend LinearForm operator*(const Rat& k, LinearForm a) { return a *= k; }
    LinearForm operator-() const;
    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }

    // Substitutes sub[i] for variable i; sub.size() must equal nvars().
    // The result lives over the variables of the sub forms.
    LinearForm substituted(const std::vector<LinearForm>& sub) const;

    // Integer row [c..., k] scaled to coprime entries; direction (sign)
    // is preserved, the zero form stays all-zero.
    std::vector<Int> primitive() const;

    std::string str(const Ambient& vars) const;
};

// Compare integer rows lexicographically; the canonical row order.
bool row_less(const std::vector<Int>& a, const std::vector<Int>& b);

LinearForm form_from_row(std::span<const Int> row);  // [c..., k] -> form

}  // namespace a2
