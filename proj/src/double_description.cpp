#include "a2/double_description.hpp"

#include <algorithm>
#include <stdexcept>

namespace a2 {

namespace {

using IVec = std::vector<Int>;

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void primitive(IVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) return;
    }
    if (g > 1)
        for (Int& x : v) x /= g;
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Lines kept in row-echelon form; rays reduced modulo the lineality so
// that equal rays of the quotient cone have equal representatives.
class DoubleDescription {
  public:
    explicit DoubleDescription(size_t n) : n_(n) {
        for (size_t i = 0; i < n; ++i) {
            IVec e(n, 0);
            e[i] = 1;
            lines_.push_back(std::move(e));
        }
        refresh_pivots();
    }

    void insert(const IVec& a) {
        if (is_zero(a)) return;
        // A line not orthogonal to a splits into a ray.
        size_t split = lines_.size();
        for (size_t i = 0; i < lines_.size(); ++i) {
            if (dot(a, lines_[i]) != 0) {
                split = i;
                break;
            }
        }
        if (split < lines_.size()) {
            IVec l0 = lines_[split];
            Int d0 = dot(a, l0);
            lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(split));
            for (IVec& l : lines_) {
                Int dl = dot(a, l);
                if (dl == 0) continue;
                IVec nl(n_);
                for (size_t i = 0; i < n_; ++i) nl[i] = d0 * l[i] - dl * l0[i];
                primitive(nl);
                l = std::move(nl);
            }
            refresh_pivots();
            for (IVec& r : rays_) {
                Int dr = dot(a, r);
                if (dr == 0) continue;
                IVec nr(n_);
                // Positive multiple of r - (dr/d0) l0, so the ray direction
                // is preserved and a.nr = 0.
                Int s = d0 > 0 ? 1 : -1;
                for (size_t i = 0; i < n_; ++i) nr[i] = s * (d0 * r[i] - dr * l0[i]);
                r = std::move(nr);
            }
            if (d0 < 0)
                for (Int& x : l0) x = -x;
            rays_.push_back(std::move(l0));
            normalize_rays();
            constraints_.push_back(a);
            return;
        }
        // Lineality orthogonal to a: split rays by sign.
        std::vector<size_t> pos, neg;
        std::vector<Int> val(rays_.size());
        for (size_t i = 0; i < rays_.size(); ++i) {
            val[i] = dot(a, rays_[i]);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
        }
        std::vector<IVec> created;
        for (size_t ip : pos) {
            for (size_t iq : neg) {
                if (!adjacent(rays_[ip], rays_[iq])) continue;
                IVec w(n_);
                for (size_t i = 0; i < n_; ++i)
                    w[i] = val[ip] * rays_[iq][i] - val[iq] * rays_[ip][i];
                reduce_mod_lines(w);
                primitive(w);
                if (is_zero(w)) continue;
                created.push_back(std::move(w));
            }
        }
        std::vector<IVec> next;
        for (size_t i = 0; i < rays_.size(); ++i)
            if (val[i] >= 0) next.push_back(std::move(rays_[i]));
        for (IVec& w : created) {
            if (std::find(next.begin(), next.end(), w) == next.end())
                next.push_back(std::move(w));
        }
        rays_ = std::move(next);
        constraints_.push_back(a);
    }

    const std::vector<IVec>& rays() const { return rays_; }
    const std::vector<IVec>& lines() const { return lines_; }

  private:
    void refresh_pivots() {
        // Gauss-Jordan over the rationals, stored as primitive integer rows.
        pivots_.clear();
        size_t row = 0;
        for (size_t col = 0; col < n_ && row < lines_.size(); ++col) {
            size_t p = row;
            while (p < lines_.size() && lines_[p][col] == 0) ++p;
            if (p == lines_.size()) continue;
            std::swap(lines_[row], lines_[p]);
            for (size_t r = 0; r < lines_.size(); ++r) {
                if (r == row || lines_[r][col] == 0) continue;
                IVec nr(n_);
                for (size_t i = 0; i < n_; ++i)
                    nr[i] = lines_[row][col] * lines_[r][i] - lines_[r][col] * lines_[row][i];
                primitive(nr);
                lines_[r] = std::move(nr);
            }
            pivots_.push_back(col);
            ++row;
        }
        normalize_rays();
    }

    void reduce_mod_lines(IVec& r) const {
        for (size_t i = 0; i < pivots_.size(); ++i) {
            size_t col = pivots_[i];
            if (r[col] == 0) continue;
            const IVec& l = lines_[i];
            Int s = l[col] > 0 ? 1 : -1;  // keep the ray direction positive
            IVec nr(n_);
            for (size_t j = 0; j < n_; ++j) nr[j] = s * (l[col] * r[j] - r[col] * l[j]);
            r = std::move(nr);
        }
        primitive(r);
    }

    void normalize_rays() {
        for (IVec& r : rays_) {
            reduce_mod_lines(r);
        }
        std::sort(rays_.begin(), rays_.end());
        rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
        rays_.erase(std::remove_if(rays_.begin(), rays_.end(), is_zero), rays_.end());
    }

    // Combinatorial adjacency over the constraints processed so far.
    bool adjacent(const IVec& p, const IVec& q) const {
        std::vector<bool> common(constraints_.size());
        for (size_t i = 0; i < constraints_.size(); ++i)
            common[i] = dot(constraints_[i], p) == 0 && dot(constraints_[i], q) == 0;
        for (const IVec& r : rays_) {
            if (r == p || r == q) continue;
            bool dominates = true;
            for (size_t i = 0; i < constraints_.size() && dominates; ++i)
                if (common[i] && dot(constraints_[i], r) != 0) dominates = false;
            if (dominates) return false;
        }
        return true;
    }

    size_t n_;
    std::vector<IVec> rays_;
    std::vector<IVec> lines_;
    std::vector<size_t> pivots_;
    std::vector<IVec> constraints_;
};

std::vector<Rat> to_rat(const IVec& v, size_t count) {
    std::vector<Rat> out(count);
    for (size_t i = 0; i < count; ++i) out[i] = Rat(v[i]);
    return out;
}

IVec scaled_int_vector(const std::vector<Rat>& v, size_t extra, const Int& last) {
    Int l = 1;
    for (const Rat& c : v) l = boost::multiprecision::lcm(l, denominator(c));
    IVec out;
    out.reserve(v.size() + extra);
    for (const Rat& c : v) out.push_back(numerator(c) * (l / denominator(c)));
    if (extra) out.push_back(last * l);
    primitive(out);
    return out;
}

}  // namespace

Generators rays_and_lines(const Cone& c) {
    if (is_empty(c)) throw std::domain_error("rays_and_lines: empty cone");
    const size_t n = c.dim();
    DoubleDescription dd(n + 1);
    // Homogenize: c.x + k t >= 0 plus t >= 0.
    IVec tpos(n + 1, 0);
    tpos[n] = 1;
    dd.insert(tpos);
    for (const LinearForm& f : c.ineqs) {
        std::vector<Int> row = f.primitive();  // [c..., k]
        dd.insert(row);
    }
    Generators g;
    for (const IVec& l : dd.lines()) {
        if (l[n] != 0) throw std::logic_error("homogenization admits a line with t != 0");
        g.lines.push_back(to_rat(l, n));
    }
    for (const IVec& r : dd.rays()) {
        if (r[n] == 0) {
            g.rays.push_back(to_rat(r, n));
        } else {
            std::vector<Rat> v(n);
            for (size_t i = 0; i < n; ++i) v[i] = Rat(r[i]) / Rat(r[n]);
            g.vertices.push_back(std::move(v));
        }
    }
    return g;
}

Cone cone_from_generators(const Ambient& vars, const Generators& g) {
    const size_t n = vars.size();
    if (g.vertices.empty() && g.rays.empty() && g.lines.empty())
        throw std::invalid_argument("cone_from_generators: no generators");
    // Dual of the homogenization: (c,k) with c.v + k >= 0, c.r >= 0, c.l = 0.
    DoubleDescription dd(n + 1);
    auto insert_pair = [&](const IVec& row, bool equality) {
        dd.insert(row);
        if (equality) {
            IVec neg(row.size());
            for (size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
            dd.insert(neg);
        }
    };
    for (const auto& v : g.vertices) insert_pair(scaled_int_vector(v, 1, 1), false);
    for (const auto& r : g.rays) insert_pair(scaled_int_vector(r, 1, 0), false);
    for (const auto& l : g.lines) insert_pair(scaled_int_vector(l, 1, 0), true);
    Cone out{vars, {}};
    auto emit = [&](const IVec& row, bool equality) {
        bool trivial = true;
        for (size_t i = 0; i < n; ++i)
            if (row[i] != 0) trivial = false;
        if (trivial) return;  // 0.x + k >= 0
        out.ineqs.push_back(form_from_row(row));
        if (equality) {
            IVec neg(row.size());
            for (size_t i = 0; i < row.size(); ++i) neg[i] = -row[i];
            out.ineqs.push_back(form_from_row(neg));
        }
    };
    for (const IVec& r : dd.rays()) emit(r, false);
    for (const IVec& l : dd.lines()) emit(l, true);
    return out;
}

}  // namespace a2
