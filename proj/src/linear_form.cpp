#include "a2/linear_form.hpp"

#include <stdexcept>

namespace a2 {

LinearForm LinearForm::variable(size_t nvars, size_t index) {
    if (index >= nvars) throw std::invalid_argument("variable index out of range");
    LinearForm f(nvars);
    f.coeffs[index] = 1;
    return f;
}

LinearForm LinearForm::constant_form(size_t nvars, Rat k) {
    LinearForm f(nvars);
    f.constant = std::move(k);
    return f;
}

bool LinearForm::is_zero() const {
    if (constant != 0) return false;
    for (const Rat& c : coeffs)
        if (c != 0) return false;
    return true;
}

Rat LinearForm::operator()(std::span<const Rat> point) const {
    if (point.size() != coeffs.size()) throw std::invalid_argument("point dimension mismatch");
    Rat v = constant;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) v += coeffs[i] * point[i];
    return v;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    if (o.nvars() != nvars()) throw std::invalid_argument("form dimension mismatch");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    constant += o.constant;
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    if (o.nvars() != nvars()) throw std::invalid_argument("form dimension mismatch");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    constant -= o.constant;
    return *this;
}

LinearForm& LinearForm::operator*=(const Rat& k) {
    for (Rat& c : coeffs) c *= k;
    constant *= k;
    return *this;
}

LinearForm LinearForm::operator-() const {
    LinearForm f = *this;
    return f *= Rat(-1);
}

LinearForm LinearForm::substituted(const std::vector<LinearForm>& sub) const {
    if (sub.size() != nvars()) throw std::invalid_argument("substitution arity mismatch");
    size_t target = sub.empty() ? 0 : sub[0].nvars();
    LinearForm out(target);
    out.constant = constant;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (sub[i].nvars() != target) throw std::invalid_argument("substitution dimension mismatch");
        out += sub[i] * coeffs[i];
    }
    return out;
}

std::vector<Int> LinearForm::primitive() const {
    Int lcm_den = 1;
    for (const Rat& c : coeffs) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(constant));
    std::vector<Int> row;
    row.reserve(coeffs.size() + 1);
    Int g = 0;
    auto push = [&](const Rat& c) {
        Int v = numerator(c) * (lcm_den / denominator(c));
        g = boost::multiprecision::gcd(g, v);
        row.push_back(std::move(v));
    };
    for (const Rat& c : coeffs) push(c);
    push(constant);
    if (g > 1)
        for (Int& v : row) v /= g;
    return row;
}

std::string LinearForm::str(const Ambient& vars) const {
    std::string s;
    auto term = [&](const Rat& c, const std::string& name) {
        if (c == 0) return;
        if (s.empty()) {
            if (c == -1 && !name.empty()) s += "-";
            else if (!(c == 1 && !name.empty())) s += to_string(c) + (name.empty() ? "" : "*");
        } else {
            s += c > 0 ? " + " : " - ";
            Rat ac = c > 0 ? c : Rat(-c);
            if (!(ac == 1 && !name.empty())) s += to_string(ac) + (name.empty() ? "" : "*");
        }
        s += name;
    };
    for (size_t i = 0; i < coeffs.size(); ++i) term(coeffs[i], i < vars.size() ? vars[i] : "v" + std::to_string(i));
    term(constant, "");
    return s.empty() ? "0" : s;
}

bool row_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

LinearForm form_from_row(std::span<const Int> row) {
    if (row.empty()) throw std::invalid_argument("empty row");
    LinearForm f(row.size() - 1);
    for (size_t i = 0; i + 1 < row.size(); ++i) f.coeffs[i] = Rat(row[i]);
    f.constant = Rat(row.back());
    return f;
}

}  // namespace a2
