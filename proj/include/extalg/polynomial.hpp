#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "extalg/rational.hpp"

namespace extalg {

/// Exponent vector over x_0, x_1, ...; trailing zero exponents are trimmed so
/// that equal monomials compare equal regardless of how many variables the
/// surrounding computation uses.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);
    static Monomial variable(int i, std::uint32_t power = 1);

    std::uint32_t exponent(int i) const {
        return i < static_cast<int>(exp_.size()) ? exp_[static_cast<std::size_t>(i)] : 0;
    }
    std::uint32_t degree() const { return degree_; }
    int variable_count() const { return static_cast<int>(exp_.size()); }
    bool is_one() const { return exp_.empty(); }
    const std::vector<std::uint32_t>& exponents() const { return exp_; }

    Monomial operator*(const Monomial& o) const;
    /// Exponent of x_i lowered by one; caller guarantees exponent(i) > 0.
    Monomial lowered(int i) const;
    Monomial without(int i) const;

    /// "x0*x1^2"; "1" for the unit monomial.
    std::string to_string() const;

    bool operator==(const Monomial&) const = default;

private:
    void trim();
    std::vector<std::uint32_t> exp_;
    std::uint32_t degree_ = 0;
};

/// Graded lexicographic order with x0 > x1 > x2 > ... ; ascending.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial in x_0, x_1, ... with exact rational coefficients.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: constants promote implicitly
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT

    static Polynomial variable(int i);
    static Polynomial monomial(const Monomial& m, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term.
    Rational constant() const;
    std::uint32_t total_degree() const;
    std::size_t size() const { return terms_.size(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// d/dx_i
    Polynomial partial(int i) const;
    /// Coefficient of x_i^power, as a polynomial in the remaining variables.
    Polynomial coefficient_of(int i, std::uint32_t power) const;

    /// Canonical text: terms in descending graded-lex order, e.g.
    /// "x0^2 - 3/2*x0*x1 + 2".
    std::string to_string() const;

    bool operator==(const Polynomial&) const = default;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Exact derivative d/dx_i. Throws std::domain_error for i < 0.
Polynomial partial(const Polynomial& f, int i);

}  // namespace extalg
