#include "a2/cses.hpp"

#include <algorithm>
#include <stdexcept>

namespace a2 {

namespace {

bool piece_less(const ConeSupportedExpression& a, const ConeSupportedExpression& b) {
    auto ra = canonical_rows(a.cone), rb = canonical_rows(b.cone);
    if (ra != rb)
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end(), row_less);
    return row_less(a.expr.primitive(), b.expr.primitive());
}

void sort_pieces(std::vector<ConeSupportedExpression>& pieces) {
    std::sort(pieces.begin(), pieces.end(), piece_less);
}

void check_compatible(const ConeSupportedExpressionSet& a, const ConeSupportedExpressionSet& b) {
    if (a.vars != b.vars) throw std::invalid_argument("cses ambient mismatch");
    if (!same_solution_set(a.domain, b.domain))
        throw std::invalid_argument("cses domain mismatch");
}

// Is d a rational combination of the given affine forms?  Decides
// whether d vanishes on the common zero locus.
bool in_affine_span(const std::vector<LinearForm>& rows, const LinearForm& d) {
    if (d.is_zero()) return true;
    size_t width = d.nvars() + 1;
    std::vector<std::vector<Rat>> m;
    for (const LinearForm& r : rows) {
        std::vector<Rat> v(r.coeffs);
        v.push_back(r.constant);
        m.push_back(std::move(v));
    }
    std::vector<Rat> target(d.coeffs);
    target.push_back(d.constant);
    // Gaussian elimination of target against the rows.
    size_t used = 0;
    for (size_t col = 0; col < width && used < m.size(); ++col) {
        size_t p = used;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[used], m[p]);
        for (size_t r2 = 0; r2 < m.size(); ++r2) {
            if (r2 == used || m[r2][col] == 0) continue;
            Rat f = m[r2][col] / m[used][col];
            for (size_t i = 0; i < width; ++i) m[r2][i] -= f * m[used][i];
        }
        if (target[col] != 0) {
            Rat f = target[col] / m[used][col];
            for (size_t i = 0; i < width; ++i) target[i] -= f * m[used][i];
        }
        ++used;
    }
    return std::all_of(target.begin(), target.end(), [](const Rat& v) { return v == 0; });
}

}  // namespace

size_t ConeSupportedExpressionSet::nonzero_count() const {
    size_t n = 0;
    for (const auto& p : pieces)
        if (!p.expr.is_zero()) ++n;
    return n;
}

ConeSupportedExpressionSet cses_constant(const Cone& domain, const Rat& value) {
    ConeSupportedExpressionSet s{domain.vars, domain, {}};
    s.pieces.push_back({reduce(domain), LinearForm::constant_form(domain.dim(), value)});
    return s;
}

ConeSupportedExpressionSet cses_add(const ConeSupportedExpressionSet& s1,
                                    const ConeSupportedExpressionSet& s2) {
    check_compatible(s1, s2);
    ConeSupportedExpressionSet out{s1.vars, s1.domain, {}};
    for (const auto& p : s1.pieces) {
        for (const auto& q : s2.pieces) {
            Cone c = intersect(p.cone, q.cone);
            if (!is_full_dimensional(c)) continue;
            out.pieces.push_back({reduce(c), p.expr + q.expr});
        }
    }
    sort_pieces(out.pieces);
    return out;
}

ConeSupportedExpressionSet cses_scale(const ConeSupportedExpressionSet& s, const Rat& k) {
    ConeSupportedExpressionSet out = s;
    for (auto& p : out.pieces) p.expr *= k;
    sort_pieces(out.pieces);
    return out;
}

ConeSupportedExpressionSet cses_simplify(const ConeSupportedExpressionSet& s) {
    ConeSupportedExpressionSet out = s;
    sort_pieces(out.pieces);
    for (bool merged = true; merged;) {
        merged = false;
        for (size_t i = 0; i < out.pieces.size() && !merged; ++i) {
            for (size_t j = i + 1; j < out.pieces.size() && !merged; ++j) {
                if (!(out.pieces[i].expr == out.pieces[j].expr)) continue;
                auto hull = hull_if_union_convex({out.pieces[i].cone, out.pieces[j].cone});
                if (!hull) continue;
                out.pieces[i].cone = *hull;
                out.pieces.erase(out.pieces.begin() + static_cast<std::ptrdiff_t>(j));
                sort_pieces(out.pieces);
                merged = true;
            }
        }
    }
    return out;
}

ConeSupportedExpressionSet pullback(const ConeSupportedExpressionSet& s,
                                    const std::vector<LinearForm>& sub, const Ambient& target_vars,
                                    const Cone& target_domain) {
    if (sub.size() != s.vars.size())
        throw std::invalid_argument("pullback substitution arity mismatch");
    for (const LinearForm& f : sub)
        if (f.nvars() != target_vars.size())
            throw std::invalid_argument("pullback substitution dimension mismatch");
    if (target_domain.vars != target_vars)
        throw std::invalid_argument("pullback target domain ambient mismatch");
    ConeSupportedExpressionSet out{target_vars, target_domain, {}};
    for (const auto& p : s.pieces) {
        Cone c{target_vars, {}};
        c.ineqs.reserve(p.cone.ineqs.size());
        for (const LinearForm& f : p.cone.ineqs) c.ineqs.push_back(f.substituted(sub));
        c = intersect(c, target_domain);
        if (!is_full_dimensional(c)) continue;
        out.pieces.push_back({reduce(c), p.expr.substituted(sub)});
    }
    sort_pieces(out.pieces);
    return out;
}

Rat evaluate(const ConeSupportedExpressionSet& s, std::span<const Rat> p) {
    if (!contains_point(s.domain, p)) throw std::domain_error("evaluate: point outside the domain");
    for (const auto& piece : s.pieces)
        if (contains_point(piece.cone, p)) return piece.expr(p);
    throw std::logic_error("evaluate: point in the domain but in no piece");
}

std::optional<std::string> validate(const ConeSupportedExpressionSet& s) {
    for (size_t i = 0; i < s.pieces.size(); ++i) {
        const Cone& c = s.pieces[i].cone;
        if (c.vars != s.vars) return "piece " + std::to_string(i) + " has a foreign ambient";
        if (!is_full_dimensional(intersect(c, s.domain)))
            return "piece " + std::to_string(i) + " is not full-dimensional in the domain";
    }
    for (size_t i = 0; i < s.pieces.size(); ++i) {
        for (size_t j = i + 1; j < s.pieces.size(); ++j) {
            Cone w = intersect(intersect(s.pieces[i].cone, s.pieces[j].cone), s.domain);
            if (is_full_dimensional(w))
                return "pieces " + std::to_string(i) + " and " + std::to_string(j) +
                       " overlap full-dimensionally";
            if (is_empty(w)) continue;
            LinearForm d = s.pieces[i].expr - s.pieces[j].expr;
            if (!in_affine_span(implicit_equalities(w), d))
                return "pieces " + std::to_string(i) + " and " + std::to_string(j) +
                       " disagree on their shared wall";
        }
    }
    std::vector<Cone> cover;
    cover.reserve(s.pieces.size());
    for (const auto& p : s.pieces) cover.push_back(p.cone);
    if (auto witness = uncovered_point(s.domain, cover)) {
        std::string msg = "domain point not covered:";
        for (const Rat& v : *witness) msg += " " + to_string(v);
        return msg;
    }
    return std::nullopt;
}

}  // namespace a2
