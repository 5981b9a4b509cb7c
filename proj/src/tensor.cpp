#include "a2/tensor.hpp"

#include <stdexcept>

namespace a2 {

const std::vector<WeylWord>& finite_weyl_words() {
    static const std::vector<WeylWord> words = {
        WeylWord::identity(), WeylWord{{1}},    WeylWord{{2}},
        WeylWord{{1, 2}},     WeylWord{{2, 1}}, WeylWord{{1, 2, 1}},
    };
    return words;
}

Int tensor_coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) {
    if (!is_dominant(lambda) || !is_dominant(mu) || !is_dominant(nu))
        throw std::invalid_argument("tensor_coefficient requires dominant weights");
    const Level ell{0};  // finite words never touch the affine wall
    Int n = 0;
    for (const WeylWord& w : finite_weyl_words())
        n += w.sign() * mult(lambda, dot_action(w, nu, ell) - mu);
    if (n < 0) throw std::logic_error("negative tensor coefficient");
    return n;
}

CoefficientTable tensor_decomposition(const Weight& lambda, const Weight& mu) {
    if (!is_dominant(lambda) || !is_dominant(mu))
        throw std::invalid_argument("tensor_decomposition requires dominant weights");
    CoefficientTable table;
    for (const auto& [omega, m] : weight_diagram(lambda).entries) {
        auto folded = fold_to_chamber(omega + mu);
        if (!folded) continue;
        table.entries[folded->weight] += folded->sign * m;
    }
    for (auto it = table.entries.begin(); it != table.entries.end();) {
        if (it->second < 0) throw std::logic_error("negative tensor coefficient");
        it = it->second == 0 ? table.entries.erase(it) : std::next(it);
    }
    return table;
}

}  // namespace a2
