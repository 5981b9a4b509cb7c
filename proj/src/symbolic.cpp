#include "a2/symbolic.hpp"

#include "a2/fusion.hpp"
#include "a2/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace a2 {

namespace {

constexpr size_t kA = 0, kB = 1, kC = 2, kD = 3, kE = 4, kF = 5, kL = 6, kNVars = 7;

LinearForm var(size_t i) { return LinearForm::variable(kNVars, i); }
LinearForm konst(int k) { return LinearForm::constant_form(kNVars, Rat(k)); }

}  // namespace

const Ambient& fusion_variables() {
    static const Ambient vars = {"a", "b", "c", "d", "e", "f", "l"};
    return vars;
}

const Cone& fusion_domain() {
    static const Cone domain = [] {
        Cone c{fusion_variables(), {}};
        for (size_t v = 0; v < 6; ++v) c.ineqs.push_back(var(v));
        c.ineqs.push_back(var(kL) - var(kA) - var(kB));
        c.ineqs.push_back(var(kL) - var(kC) - var(kD));
        c.ineqs.push_back(var(kL) - var(kE) - var(kF));
        c.ineqs.push_back(var(kL));
        return c;
    }();
    return domain;
}

std::vector<LinearForm> alcove_substitution(const WeylWord& w) {
    const auto& alcoves = contributing_alcoves();
    if (std::find(alcoves.begin(), alcoves.end(), w) == alcoves.end())
        throw std::invalid_argument("word is not one of the 13 contributing alcoves");
    // Symbolic dot action on nu = (e, f), applied right to left.
    LinearForm X = var(kE), Y = var(kF);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        switch (*it) {
            case 1: {
                LinearForm nx = -X - konst(2);
                Y = X + Y + konst(1);
                X = std::move(nx);
                break;
            }
            case 2: {
                LinearForm ny = -Y - konst(2);
                X = X + Y + konst(1);
                Y = std::move(ny);
                break;
            }
            case 0: {
                LinearForm t = var(kL) + konst(1) - X - Y;
                X += t;
                Y += t;
                break;
            }
        }
    }
    return {X - var(kC), Y - var(kD), var(kA), var(kB)};
}

SymbolicFusionResult symbolic_kac_walton(const ProgressFn& progress) {
    SymbolicFusionResult result;
    ConeSupportedExpressionSet acc = cses_constant(fusion_domain(), Rat(0));
    for (const WeylWord& w : contributing_alcoves()) {
        auto pulled = pullback(mult_piecewise_table(), alcove_substitution(w), fusion_variables(),
                               fusion_domain());
        acc = cses_simplify(cses_add(acc, cses_scale(pulled, Rat(w.sign()))));
        result.provenance.push_back({w, w.sign(), pulled.pieces.size(), acc.pieces.size()});
        if (progress) {
            std::ostringstream os;
            os << "added " << (w.sign() > 0 ? "+" : "-") << w.str() << ": "
               << pulled.pieces.size() << " pulled pieces, " << acc.pieces.size()
               << " accumulated (" << acc.nonzero_count() << " nonzero)";
            progress(os.str());
        }
    }
    result.nonzero_count = acc.nonzero_count();
    result.zero_count = acc.zero_count();
    result.pieces = std::move(acc);
    return result;
}

namespace {

struct BmwTerms {
    std::vector<LinearForm> max_terms;
    std::vector<std::string> max_names;
    std::vector<LinearForm> min_terms;
    std::vector<std::string> min_names;
};

const BmwTerms& bmw_terms() {
    static const BmwTerms t = [] {
        BmwTerms terms;
        LinearForm A(kNVars), B(kNVars);
        // A = (2(a+c+f) + (b+d+e))/3, B = ((a+c+f) + 2(b+d+e))/3.
        const Rat one_third(1, 3), two_thirds(2, 3);
        for (size_t v : {kA, kC, kF}) {
            A.coeffs[v] = two_thirds;
            B.coeffs[v] = one_third;
        }
        for (size_t v : {kB, kD, kE}) {
            A.coeffs[v] = one_third;
            B.coeffs[v] = two_thirds;
        }
        terms.max_terms = {var(kA) + var(kB), var(kC) + var(kD), var(kE) + var(kF),
                           A - var(kA),       A - var(kC),       A - var(kF),
                           B - var(kB),       B - var(kD),       B - var(kE)};
        terms.max_names = {"a+b", "c+d", "e+f", "A-a", "A-c", "A-f", "B-b", "B-d", "B-e"};
        terms.min_terms = {A, B, var(kL)};
        terms.min_names = {"A", "B", "l"};
        return terms;
    }();
    return t;
}

}  // namespace

ConeSupportedExpressionSet bmw_symbolic() {
    const BmwTerms& t = bmw_terms();
    ConeSupportedExpressionSet out{fusion_variables(), fusion_domain(), {}};
    for (size_t im = 0; im < t.max_terms.size(); ++im) {
        for (size_t in = 0; in < t.min_terms.size(); ++in) {
            Cone binding = fusion_domain();
            for (size_t m2 = 0; m2 < t.max_terms.size(); ++m2)
                if (m2 != im) binding.ineqs.push_back(t.max_terms[im] - t.max_terms[m2]);
            for (size_t n2 = 0; n2 < t.min_terms.size(); ++n2)
                if (n2 != in) binding.ineqs.push_back(t.min_terms[n2] - t.min_terms[in]);
            LinearForm g = t.min_terms[in] - t.max_terms[im] + konst(1);
            Cone nonzero = binding;
            nonzero.ineqs.push_back(g);
            if (is_full_dimensional(nonzero)) out.pieces.push_back({reduce(nonzero), g});
            Cone zero = binding;
            zero.ineqs.push_back(-g);
            if (is_full_dimensional(zero))
                out.pieces.push_back({reduce(zero), LinearForm(kNVars)});
        }
    }
    std::sort(out.pieces.begin(), out.pieces.end(),
              [](const ConeSupportedExpression& a, const ConeSupportedExpression& b) {
                  auto ra = canonical_rows(a.cone), rb = canonical_rows(b.cone);
                  return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end(),
                                                      row_less);
              });
    return out;
}

std::optional<std::string> bmw_expression_label(const LinearForm& expr) {
    const BmwTerms& t = bmw_terms();
    for (size_t im = 0; im < t.max_terms.size(); ++im)
        for (size_t in = 0; in < t.min_terms.size(); ++in)
            if (expr == t.min_terms[in] - t.max_terms[im] + konst(1))
                return "k0min = " + t.max_names[im] + ", l0max = " + t.min_names[in];
    return std::nullopt;
}

EquivalenceReport compare_piecewise(const ConeSupportedExpressionSet& f,
                                    const ConeSupportedExpressionSet& g) {
    if (f.vars != g.vars) throw std::invalid_argument("compare_piecewise ambient mismatch");
    if (!same_solution_set(f.domain, g.domain))
        throw std::invalid_argument("compare_piecewise domain mismatch");
    EquivalenceReport report;
    report.equivalent = true;
    for (size_t i = 0; i < f.pieces.size(); ++i) {
        for (size_t j = 0; j < g.pieces.size(); ++j) {
            const auto& p = f.pieces[i];
            const auto& q = g.pieces[j];
            bool same_expr = p.expr == q.expr;
            bool both_nonzero = !p.expr.is_zero() && !q.expr.is_zero();
            if (same_expr && !both_nonzero) continue;
            Cone w = intersect(intersect(p.cone, q.cone), f.domain);
            if (!is_full_dimensional(w)) continue;
            if (same_expr) {
                report.nonzero_matches.push_back({i, j});
            } else if (report.equivalent) {
                report.equivalent = false;
                auto pt = interior_point(w);
                report.witness =
                    EquivalenceWitness{reduce(w), pt ? *pt : std::vector<Rat>{}, p.expr, q.expr};
            }
        }
    }
    return report;
}

std::string proof_certificate(const SymbolicFusionResult& kw, const ConeSupportedExpressionSet& bmw,
                              const EquivalenceReport& report) {
    const Ambient& vars = fusion_variables();
    std::ostringstream os;
    os << "Symbolic Kac-Walton evaluation vs. closed fusion formula\n";
    os << "=========================================================\n\n";
    os << "Variables: lambda=(a,b), mu=(c,d), nu=(e,f), level l.\n";
    os << "Domain (all rows >= 0):\n";
    for (const LinearForm& r : fusion_domain().ineqs) os << "    " << r.str(vars) << "\n";
    os << "\nAccumulation over the 13 contributing alcoves:\n";
    for (const auto& e : kw.provenance) {
        os << "    " << (e.sign > 0 ? "+" : "-") << e.word.str() << ": " << e.pulled_pieces
           << " pulled pieces -> " << e.accumulated_pieces << " accumulated\n";
    }
    os << "\nResult: " << kw.nonzero_count << " nonzero pieces, " << kw.zero_count
       << " zero pieces.\n";
    os << "Closed formula: " << bmw.nonzero_count() << " nonzero pieces, " << bmw.zero_count()
       << " zero pieces.\n";
    os << "Equivalent: " << (report.equivalent ? "yes" : "NO") << "\n\n";
    if (report.witness) {
        os << "Counterexample region:\n";
        for (const LinearForm& r : report.witness->region.ineqs)
            os << "    " << r.str(vars) << " >= 0\n";
        os << "  witness point:";
        for (const Rat& v : report.witness->point) os << " " << to_string(v);
        os << "\n  left expression:  " << report.witness->left_expr.str(vars) << "\n"
           << "  right expression: " << report.witness->right_expr.str(vars) << "\n\n";
    }
    os << "Nonzero piece matching\n";
    os << "----------------------\n";
    size_t counter = 0;
    for (size_t i = 0; i < kw.pieces.pieces.size(); ++i) {
        const auto& piece = kw.pieces.pieces[i];
        if (piece.expr.is_zero()) continue;
        ++counter;
        os << "[" << counter << "] expression: " << piece.expr.str(vars) << "\n";
        os << "    cone:\n";
        for (const LinearForm& r : piece.cone.ineqs) os << "        " << r.str(vars) << " >= 0\n";
        bool matched = false;
        for (const PieceMatch& m : report.nonzero_matches) {
            if (m.left != i) continue;
            matched = true;
            const auto& q = bmw.pieces[m.right];
            os << "    matches closed-formula piece";
            if (auto label = bmw_expression_label(q.expr)) os << " (" << *label << ")";
            os << " with expression " << q.expr.str(vars) << "\n";
        }
        if (!matched) os << "    UNMATCHED\n";
        os << "\n";
    }
    return os.str();
}

}  // namespace a2
