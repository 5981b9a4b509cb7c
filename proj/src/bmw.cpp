#include "a2/bmw.hpp"

#include <algorithm>
#include <stdexcept>

namespace a2 {

namespace {

Int min3(const Int& a, const Int& b, const Int& c) { return std::min(std::min(a, b), c); }

BmwIntermediates intermediates(const Weight& lambda, const Weight& mu, const Weight& nu,
                               const Rat& ell) {
    if (!is_dominant(lambda) || !is_dominant(mu) || !is_dominant(nu))
        throw std::invalid_argument("bmw intermediates require dominant weights");
    const Int &a = lambda.x, &b = lambda.y, &c = mu.x, &d = mu.y, &e = nu.x, &f = nu.y;
    Int s = a + c + f, t = b + d + e;
    BmwIntermediates r;
    r.A = Rat(2 * s + t) / 3;
    r.B = Rat(s + 2 * t) / 3;
    r.k0min = Rat(a + b);
    r.k0min = std::max(r.k0min, Rat(c + d));
    r.k0min = std::max(r.k0min, Rat(e + f));
    r.k0min = std::max(r.k0min, r.A - Rat(min3(a, c, f)));
    r.k0min = std::max(r.k0min, r.B - Rat(min3(b, d, e)));
    r.k0max = std::min(r.A, r.B);
    r.l0max = std::min(r.k0max, ell);
    r.delta = (r.k0max >= r.k0min && is_integer(r.A) && is_integer(r.B) && r.A >= 0 && r.B >= 0)
                  ? 1
                  : 0;
    return r;
}

Int as_coefficient(const Rat& value) {
    if (!is_integer(value)) throw std::logic_error("BMW coefficient is not an integer");
    return numerator(value);
}

}  // namespace

BmwIntermediates bmw_intermediates(const Weight& lambda, const Weight& mu, const Weight& nu,
                                   const Level& ell) {
    return intermediates(lambda, mu, nu, Rat(ell.value));
}

Int bmw_tensor(const Weight& lambda, const Weight& mu, const Weight& nu) {
    // A sentinel level beyond every truncation: k0max <= sum of all six letters.
    Rat big(lambda.x + lambda.y + mu.x + mu.y + nu.x + nu.y + 1);
    BmwIntermediates r = intermediates(lambda, mu, nu, big);
    if (r.delta == 0) return 0;
    return as_coefficient(r.k0max - r.k0min + 1);
}

Int bmw_fusion(const Weight& lambda, const Weight& mu, const Weight& nu, const Level& ell) {
    if (!in_alcove(lambda, ell) || !in_alcove(mu, ell))
        throw std::invalid_argument("bmw_fusion requires lambda and mu in the level alcove");
    if (!is_dominant(nu)) throw std::invalid_argument("bmw_fusion requires dominant nu");
    // For nu beyond the truncation, k0min >= e+f > l >= l0max forces 0.
    BmwIntermediates r = bmw_intermediates(lambda, mu, nu, ell);
    if (!is_integer(r.A) || !is_integer(r.B) || r.A < 0 || r.B < 0) return 0;
    Rat g = r.l0max - r.k0min + 1;
    return g >= 0 ? as_coefficient(g) : Int(0);
}

}  // namespace a2
