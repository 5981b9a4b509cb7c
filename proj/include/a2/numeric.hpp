#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace a2 {

// Exact arithmetic everywhere: arbitrary-precision integers for lattice
// data, exact rationals for Killing-form values, cone inequalities and
// piecewise expressions.  No floating point in the library.  Expression
// templates are off so arithmetic yields plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Nonnegative remainder of v modulo m (m > 0).
inline Int mod_floor(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace a2
