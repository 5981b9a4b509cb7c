#include "a2/verify.hpp"

#include "a2/bmw.hpp"
#include "a2/fusion.hpp"
#include "a2/tensor.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace a2 {

namespace {

struct PairTask {
    Int level;
    Weight lambda;
    Weight mu;
};

Weight conjugate(const Weight& w) { return {w.y, w.x}; }

CoefficientTable conjugate(const CoefficientTable& t) {
    CoefficientTable out;
    for (const auto& [nu, n] : t.entries) out.entries.emplace(conjugate(nu), n);
    return out;
}

std::string describe(const Int& a, const Int& b) { return to_string(a) + " vs " + to_string(b); }

void run_task(const PairTask& task, SweepResult& local) {
    const Level ell{task.level};
    const Weight &la = task.lambda, &mu = task.mu;
    ++local.pairs;
    CoefficientTable folded = fusion_decomposition(la, mu, ell, FusionMode::folding);

    // lambda <-> mu symmetry, once per unordered pair.
    if (la < mu) {
        CoefficientTable swapped = fusion_decomposition(mu, la, ell, FusionMode::folding);
        if (!(swapped == folded))
            local.property_mismatches.push_back(
                {task.level, la, mu, Weight{}, "fusion table changes under lambda<->mu"});
    }
    // Simultaneous conjugation, once per orbit representative.
    Weight lc = conjugate(la), mc = conjugate(mu);
    if (std::pair(la, mu) <= std::pair(lc, mc)) {
        CoefficientTable conj = fusion_decomposition(lc, mc, ell, FusionMode::folding);
        if (!(conj == conjugate(folded)))
            local.property_mismatches.push_back(
                {task.level, la, mu, Weight{}, "fusion table changes under conjugation"});
    }

    for (Int e = 0; e <= task.level; ++e) {
        for (Int f = 0; e + f <= task.level; ++f) {
            Weight nu{e, f};
            ++local.triples;
            Int n_fold = folded.coefficient(nu);
            Int n_alc = fusion_coefficient({la, mu, nu, ell}, FusionMode::alcoves);
            Int n_bmw = bmw_fusion(la, mu, nu, ell);
            if (n_fold != n_alc)
                local.mode_mismatches.push_back(
                    {task.level, la, mu, nu, "folding vs alcoves: " + describe(n_fold, n_alc)});
            if (n_alc != n_bmw)
                local.bmw_mismatches.push_back(
                    {task.level, la, mu, nu, "kac-walton vs closed formula: " + describe(n_alc, n_bmw)});
            Int n_tensor = tensor_coefficient(la, mu, nu);
            if (n_alc > n_tensor)
                local.property_mismatches.push_back(
                    {task.level, la, mu, nu, "fusion exceeds tensor: " + describe(n_alc, n_tensor)});
            if (n_alc != 0) {
                Int cls = (la.x + mu.x - nu.x) + 2 * (la.y + mu.y - nu.y);
                if (mod_floor(cls, 3) != 0)
                    local.property_mismatches.push_back(
                        {task.level, la, mu, nu, "support congruence violated"});
            }
        }
    }
}

}  // namespace

SweepResult verify_sweep(const Int& max_level, int jobs) {
    std::vector<PairTask> tasks;
    for (Int l = 0; l <= max_level; ++l) {
        for (Int a = 0; a <= l; ++a)
            for (Int b = 0; a + b <= l; ++b)
                for (Int c = 0; c <= l; ++c)
                    for (Int d = 0; c + d <= l; ++d)
                        tasks.push_back({l, Weight{a, b}, Weight{c, d}});
    }
    if (jobs < 1) jobs = 1;
    std::vector<SweepResult> partial(tasks.size());
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_task(tasks[i], partial[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(tasks[i], partial[i]);
            });
        }
        for (auto& th : pool) th.join();
    }
    // Merge in task order: results are identical for every job count.
    SweepResult out;
    auto append = [](std::vector<SweepMismatch>& dst, std::vector<SweepMismatch>& src) {
        dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                   std::make_move_iterator(src.end()));
    };
    for (SweepResult& p : partial) {
        out.pairs += p.pairs;
        out.triples += p.triples;
        append(out.mode_mismatches, p.mode_mismatches);
        append(out.bmw_mismatches, p.bmw_mismatches);
        append(out.property_mismatches, p.property_mismatches);
    }
    return out;
}

}  // namespace a2
