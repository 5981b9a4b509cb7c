#include "a2/fusion.hpp"

#include <stdexcept>

namespace a2 {

const std::vector<WeylWord>& contributing_alcoves() {
    static const std::vector<WeylWord> words = {
        WeylWord{{0, 2, 0}}, WeylWord{{0, 1, 0}}, WeylWord{{1, 2, 1}},
        WeylWord{{0, 2}},    WeylWord{{0, 1}},    WeylWord{{2, 0}},
        WeylWord{{1, 0}},    WeylWord{{2, 1}},    WeylWord{{1, 2}},
        WeylWord{{0}},       WeylWord{{2}},       WeylWord{{1}},
        WeylWord::identity(),
    };
    return words;
}

namespace {

void require_in_alcove(const Weight& w, const Level& ell, const char* name) {
    if (!in_alcove(w, ell))
        throw std::invalid_argument(std::string(name) + " is not in the level-" +
                                    to_string(ell.value) + " alcove");
}

Int alcove_sum(const Weight& lambda, const Weight& mu, const Weight& nu, const Level& ell) {
    Int n = 0;
    for (const WeylWord& w : contributing_alcoves())
        n += w.sign() * mult(lambda, dot_action(w, nu, ell) - mu);
    if (n < 0) throw std::logic_error("negative fusion coefficient");
    return n;
}

}  // namespace

Int fusion_coefficient(const FusionQuery& q, FusionMode mode) {
    require_in_alcove(q.lambda, q.level, "lambda");
    require_in_alcove(q.mu, q.level, "mu");
    if (!is_dominant(q.nu)) throw std::invalid_argument("nu must be dominant");
    // A dominant nu beyond the truncation never appears in the output.
    if (!in_alcove(q.nu, q.level)) return 0;
    if (mode == FusionMode::alcoves) return alcove_sum(q.lambda, q.mu, q.nu, q.level);
    return fusion_decomposition(q.lambda, q.mu, q.level, FusionMode::folding).coefficient(q.nu);
}

CoefficientTable fusion_decomposition(const Weight& lambda, const Weight& mu, const Level& ell,
                                      FusionMode mode) {
    require_in_alcove(lambda, ell, "lambda");
    require_in_alcove(mu, ell, "mu");
    CoefficientTable table;
    if (mode == FusionMode::folding) {
        for (const auto& [omega, m] : weight_diagram(lambda).entries) {
            auto folded = fold_to_alcove(omega + mu, ell);
            if (!folded) continue;
            table.entries[folded->weight] += folded->sign * m;
        }
        for (auto it = table.entries.begin(); it != table.entries.end();) {
            if (it->second < 0) throw std::logic_error("negative fusion coefficient");
            it = it->second == 0 ? table.entries.erase(it) : std::next(it);
        }
    } else {
        for (Int e = 0; e <= ell.value; ++e) {
            for (Int f = 0; e + f <= ell.value; ++f) {
                Weight nu{e, f};
                Int n = alcove_sum(lambda, mu, nu, ell);
                if (n > 0) table.entries.emplace(nu, n);
            }
        }
    }
    return table;
}

}  // namespace a2
