#include "a2/cone.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <stdexcept>

namespace a2 {

namespace {

constexpr size_t kHistBits = 1024;
using Hist = std::bitset<kHistBits>;

// One inequality row [c0..c(n-1), k] meaning c.x + k >= 0 (or > 0 when
// strict).  `hist` tracks which original rows produced it, for the
// Imbert-Chernikov redundancy filter during elimination.
struct FmRow {
    std::vector<Int> r;
    bool strict = false;
    Hist hist;
};

void make_primitive(std::vector<Int>& r) {
    Int g = 0;
    for (const Int& v : r) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) return;
    }
    if (g > 1)
        for (Int& v : r) v /= g;
}

bool all_coeffs_zero(const std::vector<Int>& r) {
    for (size_t i = 0; i + 1 < r.size(); ++i)
        if (r[i] != 0) return false;
    return true;
}

// The working system of a Fourier-Motzkin run.
class FmSystem {
  public:
    FmSystem(size_t nvars, bool track_history)
        : n_(nvars), track_(track_history) {}

    bool contradiction() const { return contradiction_; }
    size_t eliminated() const { return eliminated_; }
    const std::vector<FmRow>& rows() const { return rows_; }

    void add(std::vector<Int> r, bool strict, const Hist& hist) {
        if (contradiction_) return;
        make_primitive(r);
        if (all_coeffs_zero(r)) {
            const Int& k = r.back();
            if (k < 0 || (k == 0 && strict)) contradiction_ = true;
            return;  // trivially true otherwise
        }
        auto [it, inserted] = index_.try_emplace(std::move(r), rows_.size());
        if (inserted) {
            rows_.push_back(FmRow{it->first, strict, hist});
        } else {
            FmRow& old = rows_[it->second];
            old.strict = old.strict || strict;
            if (track_ && hist.count() < old.hist.count()) old.hist = hist;
        }
    }

    // Removes every row that mentions variable v, inserting the valid
    // pairwise combinations.  Returns false on contradiction.
    bool eliminate(size_t v) {
        std::vector<FmRow> pos, neg, keep;
        for (FmRow& row : rows_) {
            const Int& cv = row.r[v];
            if (cv > 0) pos.push_back(std::move(row));
            else if (cv < 0) neg.push_back(std::move(row));
            else keep.push_back(std::move(row));
        }
        rows_.clear();
        index_.clear();
        ++eliminated_;
        for (FmRow& row : keep) {
            auto [it, inserted] = index_.try_emplace(std::move(row.r), rows_.size());
            if (inserted) rows_.push_back(FmRow{it->first, row.strict, row.hist});
            else {
                FmRow& old = rows_[it->second];
                old.strict = old.strict || row.strict;
            }
        }
        for (const FmRow& p : pos) {
            for (const FmRow& q : neg) {
                Hist h = p.hist | q.hist;
                // After eliminating e variables, a row combined from more
                // than e+1 original rows is redundant (Imbert).
                if (track_ && h.count() > eliminated_ + 1) continue;
                Int a = p.r[v], b = -q.r[v];
                Int g = boost::multiprecision::gcd(a, b);
                a /= g;
                b /= g;
                std::vector<Int> nr(n_ + 1);
                for (size_t i = 0; i <= n_; ++i) nr[i] = b * p.r[i] + a * q.r[i];
                add(std::move(nr), p.strict || q.strict, h);
                if (contradiction_) return false;
            }
        }
        return !contradiction_;
    }

    // Variable whose elimination generates the fewest combinations; -1
    // when no variable occurs in any row.
    int pick_variable() const {
        std::vector<size_t> pos(n_, 0), neg(n_, 0);
        for (const FmRow& row : rows_) {
            for (size_t v = 0; v < n_; ++v) {
                if (row.r[v] > 0) ++pos[v];
                else if (row.r[v] < 0) ++neg[v];
            }
        }
        int best = -1;
        size_t best_score = 0;
        for (size_t v = 0; v < n_; ++v) {
            if (pos[v] == 0 && neg[v] == 0) continue;
            size_t score = pos[v] * neg[v];
            if (best < 0 || score < best_score) {
                best = static_cast<int>(v);
                best_score = score;
            }
        }
        return best;
    }

  private:
    size_t n_;
    bool track_;
    bool contradiction_ = false;
    size_t eliminated_ = 0;
    std::vector<FmRow> rows_;
    std::map<std::vector<Int>, size_t> index_;
};

struct SRow {
    LinearForm form;
    bool strict;
};

std::vector<Int> srow_to_ints(const SRow& s) { return s.form.primitive(); }

bool feasible(const std::vector<SRow>& system, size_t nvars) {
    bool track = system.size() <= kHistBits;
    FmSystem fm(nvars, track);
    size_t idx = 0;
    for (const SRow& s : system) {
        Hist h;
        if (track) h.set(idx++);
        fm.add(srow_to_ints(s), s.strict, h);
        if (fm.contradiction()) return false;
    }
    for (;;) {
        int v = fm.pick_variable();
        if (v < 0) return !fm.contradiction();
        if (!fm.eliminate(static_cast<size_t>(v))) return false;
    }
}

std::vector<SRow> rows_of(const Cone& c, bool strict) {
    std::vector<SRow> out;
    out.reserve(c.ineqs.size());
    for (const LinearForm& f : c.ineqs) out.push_back({f, strict});
    return out;
}

SRow negated(const LinearForm& f) { return SRow{-f, true}; }

// Exact rational point of a feasible mixed system, found by eliminating
// variables highest-index-first and back-substituting through the
// projection ladder.
std::optional<std::vector<Rat>> point_in(const std::vector<SRow>& system, size_t nvars) {
    bool track = system.size() <= kHistBits;
    FmSystem fm(nvars, track);
    size_t idx = 0;
    for (const SRow& s : system) {
        Hist h;
        if (track) h.set(idx++);
        fm.add(srow_to_ints(s), s.strict, h);
        if (fm.contradiction()) return std::nullopt;
    }
    std::vector<std::vector<FmRow>> ladder(nvars + 1);
    ladder[nvars] = fm.rows();
    for (size_t v = nvars; v-- > 0;) {
        if (!fm.eliminate(v)) return std::nullopt;
        ladder[v] = fm.rows();
    }
    std::vector<Rat> values(nvars, Rat(0));
    for (size_t v = 0; v < nvars; ++v) {
        // Bounds on variable v from the system over variables 0..v.
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rat lo, hi;
        for (const FmRow& row : ladder[v + 1]) {
            const Int& cv = row.r[v];
            if (cv == 0) continue;
            Rat rest(row.r[nvars]);
            for (size_t i = 0; i < v; ++i)
                if (row.r[i] != 0) rest += Rat(row.r[i]) * values[i];
            Rat bound = -rest / Rat(cv);
            if (cv > 0) {
                if (!has_lo || bound > lo) {
                    lo = bound;
                    lo_strict = row.strict;
                    has_lo = true;
                } else if (bound == lo) {
                    lo_strict = lo_strict || row.strict;
                }
            } else {
                if (!has_hi || bound < hi) {
                    hi = bound;
                    hi_strict = row.strict;
                    has_hi = true;
                } else if (bound == hi) {
                    hi_strict = hi_strict || row.strict;
                }
            }
        }
        if (has_lo && has_hi) {
            if (lo > hi || (lo == hi && (lo_strict || hi_strict)))
                throw std::logic_error("back-substitution hit an empty interval");
            values[v] = lo == hi ? lo : (lo + hi) / 2;
        } else if (has_lo) {
            values[v] = lo + 1;
        } else if (has_hi) {
            values[v] = hi - 1;
        }
    }
    return values;
}

void check_same_ambient(const Cone& a, const Cone& b) {
    if (a.vars != b.vars) throw std::invalid_argument("ambient variable tuples differ");
}

std::optional<std::vector<Rat>> uncovered_search(std::vector<SRow>& region,
                                                 std::vector<const Cone*> cover, size_t nvars) {
    if (!feasible(region, nvars)) return std::nullopt;
    size_t pick = cover.size();
    for (size_t i = 0; i < cover.size(); ++i) {
        std::vector<SRow> test = region;
        for (const LinearForm& f : cover[i]->ineqs) test.push_back({f, false});
        if (feasible(test, nvars)) {
            pick = i;
            break;
        }
    }
    if (pick == cover.size()) return point_in(region, nvars);
    const Cone* chosen = cover[pick];
    cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(pick));
    size_t base = region.size();
    for (const LinearForm& f : chosen->ineqs) {
        region.push_back(negated(f));
        bool branch_nonempty = feasible(region, nvars);
        if (branch_nonempty) {
            if (auto p = uncovered_search(region, cover, nvars)) {
                region.resize(base);
                return p;
            }
        }
        region.pop_back();
        // Keep f >= 0 for the remaining branches only when it actually cuts.
        if (branch_nonempty) region.push_back({f, false});
    }
    region.resize(base);
    return std::nullopt;
}

}  // namespace

Cone whole_space(Ambient vars) { return Cone{std::move(vars), {}}; }

Cone intersect(const Cone& c1, const Cone& c2) {
    check_same_ambient(c1, c2);
    Cone out = c1;
    out.ineqs.insert(out.ineqs.end(), c2.ineqs.begin(), c2.ineqs.end());
    return out;
}

bool is_empty(const Cone& c) { return !feasible(rows_of(c, false), c.dim()); }

bool is_full_dimensional(const Cone& c) { return feasible(rows_of(c, true), c.dim()); }

bool is_subset(const Cone& inner, const Cone& outer) {
    check_same_ambient(inner, outer);
    for (const LinearForm& f : outer.ineqs) {
        std::vector<SRow> sys = rows_of(inner, false);
        sys.push_back(negated(f));
        if (feasible(sys, inner.dim())) return false;
    }
    return true;
}

bool same_solution_set(const Cone& a, const Cone& b) {
    return is_subset(a, b) && is_subset(b, a);
}

bool contains_point(const Cone& c, std::span<const Rat> p) {
    for (const LinearForm& f : c.ineqs)
        if (f(p) < 0) return false;
    return true;
}

Cone reduce(const Cone& c) {
    if (is_empty(c)) throw std::domain_error("reduce: empty cone");
    // Deduplicate primitive rows first.
    std::vector<std::vector<Int>> rows;
    for (const LinearForm& f : c.ineqs) {
        std::vector<Int> r = f.primitive();
        if (all_coeffs_zero(r)) continue;  // nonnegative constant, trivially true
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(std::move(r));
    }
    // Drop redundant rows one at a time; the solution set never changes.
    for (size_t i = 0; i < rows.size();) {
        std::vector<SRow> sys;
        sys.reserve(rows.size());
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != i) sys.push_back({form_from_row(rows[j]), false});
        sys.push_back(negated(form_from_row(rows[i])));
        if (feasible(sys, c.dim())) {
            ++i;  // cuts the set; keep
        } else {
            rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    std::sort(rows.begin(), rows.end(), row_less);
    Cone out{c.vars, {}};
    out.ineqs.reserve(rows.size());
    for (const auto& r : rows) out.ineqs.push_back(form_from_row(r));
    return out;
}

std::optional<std::vector<Rat>> interior_point(const Cone& c) {
    return point_in(rows_of(c, true), c.dim());
}

std::vector<LinearForm> implicit_equalities(const Cone& c) {
    std::vector<LinearForm> out;
    for (size_t i = 0; i < c.ineqs.size(); ++i) {
        std::vector<SRow> sys = rows_of(c, false);
        sys[i].strict = true;
        if (!feasible(sys, c.dim())) out.push_back(c.ineqs[i]);
    }
    return out;
}

std::optional<std::vector<Rat>> uncovered_point(const Cone& region,
                                                const std::vector<Cone>& cover) {
    std::vector<const Cone*> cs;
    cs.reserve(cover.size());
    for (const Cone& c : cover) {
        check_same_ambient(region, c);
        cs.push_back(&c);
    }
    std::vector<SRow> sys = rows_of(region, false);
    return uncovered_search(sys, std::move(cs), region.dim());
}

std::optional<Cone> hull_if_union_convex(const std::vector<Cone>& cones) {
    if (cones.empty()) throw std::invalid_argument("empty union");
    for (const Cone& c : cones) check_same_ambient(cones.front(), c);
    if (cones.size() == 1) return reduce(cones.front());
    // Envelope: every row, from any piece, that is valid for all pieces.
    std::vector<std::vector<Int>> rows;
    Cone env{cones.front().vars, {}};
    for (size_t i = 0; i < cones.size(); ++i) {
        for (const LinearForm& f : cones[i].ineqs) {
            std::vector<Int> key = f.primitive();
            if (all_coeffs_zero(key)) continue;
            if (std::find(rows.begin(), rows.end(), key) != rows.end()) continue;
            bool valid = true;
            for (size_t j = 0; j < cones.size() && valid; ++j) {
                if (j == i) continue;
                std::vector<SRow> sys = rows_of(cones[j], false);
                sys.push_back(negated(f));
                valid = !feasible(sys, env.dim());
            }
            if (valid) {
                env.ineqs.push_back(form_from_row(key));
                rows.push_back(std::move(key));
            }
        }
    }
    if (uncovered_point(env, cones)) return std::nullopt;
    return reduce(env);
}

bool is_union_convex(const std::vector<Cone>& cones) {
    return hull_if_union_convex(cones).has_value();
}

std::vector<std::vector<Int>> canonical_rows(const Cone& c) {
    std::vector<std::vector<Int>> rows;
    for (const LinearForm& f : c.ineqs) {
        std::vector<Int> r = f.primitive();
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), row_less);
    return rows;
}

bool canonical_less(const Cone& a, const Cone& b) {
    auto ra = canonical_rows(a), rb = canonical_rows(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end(), row_less);
}

}  // namespace a2
