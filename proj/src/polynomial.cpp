#include "extalg/polynomial.hpp"

#include <stdexcept>

namespace extalg {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exp_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(int i, std::uint32_t power) {
    if (i < 0) throw std::domain_error("negative variable index");
    std::vector<std::uint32_t> e(static_cast<std::size_t>(i) + 1, 0);
    e.back() = power;
    return Monomial(std::move(e));
}

void Monomial::trim() {
    while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
    degree_ = 0;
    for (auto e : exp_) degree_ += e;
}

Monomial Monomial::operator*(const Monomial& o) const {
    const auto& longer = exp_.size() >= o.exp_.size() ? exp_ : o.exp_;
    const auto& shorter = exp_.size() >= o.exp_.size() ? o.exp_ : exp_;
    Monomial out;
    out.exp_ = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i) out.exp_[i] += shorter[i];
    out.degree_ = degree_ + o.degree_;
    return out;
}

Monomial Monomial::lowered(int i) const {
    Monomial out = *this;
    --out.exp_[static_cast<std::size_t>(i)];
    out.trim();
    return out;
}

Monomial Monomial::without(int i) const {
    Monomial out = *this;
    if (i < static_cast<int>(out.exp_.size())) out.exp_[static_cast<std::size_t>(i)] = 0;
    out.trim();
    return out;
}

std::string Monomial::to_string() const {
    if (exp_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i);
        if (exp_[i] > 1) s += '^' + std::to_string(exp_[i]);
    }
    return s;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const int n = std::max(a.variable_count(), b.variable_count());
    for (int i = 0; i < n; ++i) {
        const auto ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb;
    }
    return false;
}

Polynomial::Polynomial(const Rational& c) {
    if (!extalg::is_zero(c)) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(int i) { return monomial(Monomial::variable(i), Rational(1)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (extalg::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (extalg::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rational(-c));
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Rational(ca * cb));
    return out;
}

Polynomial Polynomial::partial(int i) const {
    if (i < 0) throw std::domain_error("negative variable index");
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        const auto e = m.exponent(i);
        if (e == 0) continue;
        out.add_term(m.lowered(i), Rational(c * e));
    }
    return out;
}

Polynomial Polynomial::coefficient_of(int i, std::uint32_t power) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (m.exponent(i) == power) out.add_term(m.without(i), c);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        if (m.is_one())
            s += extalg::to_string(mag);
        else if (mag == 1)
            s += m.to_string();
        else
            s += extalg::to_string(mag) + "*" + m.to_string();
    }
    return s;
}

Polynomial partial(const Polynomial& f, int i) { return f.partial(i); }

}  // namespace extalg
