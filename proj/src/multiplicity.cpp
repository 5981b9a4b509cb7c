#include "a2/multiplicity.hpp"

#include <stdexcept>

namespace a2 {

Int WeightDiagram::total_multiplicity() const {
    Int s = 0;
    for (const auto& [w, m] : entries) s += m;
    return s;
}

Int weyl_dimension(const Weight& lambda) {
    return (lambda.x + 1) * (lambda.y + 1) * (lambda.x + lambda.y + 2) / 2;
}

Int mult_dominant(const Weight& lambda, const Weight& phi) {
    if (!is_dominant(lambda) || !is_dominant(phi))
        throw std::invalid_argument("mult_dominant requires dominant weights");
    const Int &a = lambda.x, &b = lambda.y, &x = phi.x, &y = phi.y;
    Int t1 = a + 2 * b - x - 2 * y;
    if (mod_floor(t1, 3) != 0) return 0;
    Int t2 = 2 * a + b - 2 * x - y;  // t2 = 0 mod 3 whenever t1 is
    Int m = t1 / 3 + 1;              // j+1 where phi = lambda - i a1 - j a2
    Int i1 = t2 / 3 + 1;             // i+1
    if (i1 < m) m = i1;
    if (a + 1 < m) m = a + 1;
    if (b + 1 < m) m = b + 1;
    return m > 0 ? m : Int(0);
}

Int mult(const Weight& lambda, const Weight& phi) {
    if (!is_dominant(lambda)) throw std::invalid_argument("mult requires dominant lambda");
    return mult_dominant(lambda, fold_dominant_plain(phi));
}

WeightDiagram weight_diagram(const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("weight_diagram requires dominant lambda");
    WeightDiagram wd;
    Int bound = lambda.x + lambda.y;
    for (Int i = 0; i <= bound; ++i) {
        for (Int j = 0; j <= bound; ++j) {
            Weight phi{lambda.x - 2 * i + j, lambda.y + i - 2 * j};
            Int m = mult_dominant(lambda, fold_dominant_plain(phi));
            if (m > 0) wd.entries.emplace(phi, m);
        }
    }
    return wd;
}

namespace {

// Is phi a weight of V(lambda)?  Fold to the dominant chamber and test
// lambda - phi+ = i*alpha1 + j*alpha2 with i, j >= 0.
bool in_support(const Weight& lambda, const Weight& phi) {
    Weight p = fold_dominant_plain(phi);
    Int d1 = lambda.x - p.x, d2 = lambda.y - p.y;
    Int t1 = 2 * d1 + d2, t2 = d1 + 2 * d2;
    return mod_floor(t1, 3) == 0 && t1 >= 0 && t2 >= 0;
}

}  // namespace

std::map<Weight, Int> freudenthal_diagram(const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("freudenthal_diagram requires dominant lambda");
    std::map<Weight, Int> table;
    const Weight roots[3] = {alpha1(), alpha2(), highest_root()};
    // Index steps of phi + k*alpha in (i,j) coordinates of lambda - i a1 - j a2.
    const int step_i[3] = {1, 0, 1};
    const int step_j[3] = {0, 1, 1};
    const Int bound = lambda.x + lambda.y;
    const Rat norm_lambda = killing_form(lambda + rho(), lambda + rho());

    auto weight_at = [&](const Int& i, const Int& j) {
        return Weight{lambda.x - 2 * i + j, lambda.y + i - 2 * j};
    };

    for (Int s = 0; s <= 2 * bound; ++s) {
        Int ilo = s > bound ? s - bound : Int(0);
        Int ihi = s < bound ? s : bound;
        for (Int i = ilo; i <= ihi; ++i) {
            Int j = s - i;
            Weight phi = weight_at(i, j);
            if (i == 0 && j == 0) {
                table.emplace(phi, 1);
                continue;
            }
            if (!in_support(lambda, phi)) continue;
            Rat rhs = 0;
            for (int r = 0; r < 3; ++r) {
                for (Int k = 1;; ++k) {
                    Int ik = i - k * step_i[r], jk = j - k * step_j[r];
                    if (ik < 0 || jk < 0) break;
                    Weight up = weight_at(ik, jk);
                    auto it = table.find(up);
                    if (it == table.end()) continue;
                    Weight shifted{phi.x + k * roots[r].x, phi.y + k * roots[r].y};
                    rhs += killing_form(shifted, roots[r]) * Rat(it->second);
                }
            }
            Rat denom = norm_lambda - killing_form(phi + rho(), phi + rho());
            if (denom <= 0) throw std::logic_error("Freudenthal denominator not positive");
            Rat val = 2 * rhs / denom;
            if (!is_integer(val) || numerator(val) < 1)
                throw std::logic_error("Freudenthal recursion produced a non-positive or fractional value");
            table.emplace(phi, numerator(val));
        }
    }
    return table;
}

Int mult_freudenthal(const Weight& lambda, const Weight& phi) {
    auto table = freudenthal_diagram(lambda);
    auto it = table.find(phi);
    return it == table.end() ? Int(0) : it->second;
}

}  // namespace a2
