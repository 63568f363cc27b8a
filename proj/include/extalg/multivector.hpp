#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "extalg/index_list.hpp"
#include "extalg/metric.hpp"
#include "extalg/rational.hpp"

namespace extalg {

/// Multiply a scalar by a permutation/metric sign.
template <class S>
S signed_value(Sign s, const S& v) {
    switch (s.value()) {
        case 1: return v;
        case -1: return S(-v);
        default: return S();
    }
}

namespace detail {
template <class S>
bool coeff_is_zero(const S& v) {
    return is_zero(v);
}
}  // namespace detail

/// Homogeneous-grade multivector over the scalar ring S: a sparse map from
/// basis blades to nonzero coefficients.
///
/// The grade is carried even by the zero multivector. Grades outside
/// [0, k+n] are representable only by the zero multivector; they arise from
/// grade-raising or grade-lowering operations that leave the algebra.
template <class S>
class Multivector {
public:
    using Scalar = S;
    using Terms = std::map<IndexList, S>;

    Multivector(Metric metric, int grade) : metric_(metric), grade_(grade) {}

    static Multivector blade(Metric metric, const IndexList& I, S coeff = S(1)) {
        Multivector out(metric, static_cast<int>(I.size()));
        out.add_term(I, coeff);
        return out;
    }
    static Multivector scalar(Metric metric, S value) { return blade(metric, IndexList(), std::move(value)); }

    const Metric& metric() const { return metric_; }
    int grade() const { return grade_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(const IndexList& I) const {
        auto it = terms_.find(I);
        return it == terms_.end() ? S() : it->second;
    }

    /// Accumulates coeff * e_I. Throws std::domain_error if I does not match
    /// the grade or leaves the metric's dimension.
    void add_term(const IndexList& I, const S& coeff) {
        if (static_cast<int>(I.size()) != grade_)
            throw std::domain_error("blade " + I.to_string() + " does not have grade " + std::to_string(grade_));
        if (I.span_dimension() > metric_.dim())
            throw std::domain_error("blade " + I.to_string() + " outside dimension " + std::to_string(metric_.dim()));
        if (is_zero_value(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(I, coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero_value(it->second)) terms_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& o) {
        require_compatible(o);
        for (const auto& [I, c] : o.terms_) add_term(I, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        require_compatible(o);
        for (const auto& [I, c] : o.terms_) add_term(I, S(-c));
        return *this;
    }
    Multivector operator-() const {
        Multivector out(metric_, grade_);
        for (const auto& [I, c] : terms_) out.terms_.emplace(I, S(-c));
        return out;
    }
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }

    /// Coefficient-wise product with a scalar of the ring.
    Multivector scaled(const S& factor) const {
        Multivector out(metric_, grade_);
        for (const auto& [I, c] : terms_) out.add_term(I, c * factor);
        return out;
    }

    /// Applies f to every coefficient (f must be linear for the result to be
    /// meaningful as a multivector map).
    template <class F>
    Multivector map_coefficients(F&& f) const {
        Multivector out(metric_, grade_);
        for (const auto& [I, c] : terms_) out.add_term(I, f(c));
        return out;
    }

    bool operator==(const Multivector& o) const {
        return metric_ == o.metric_ && grade_ == o.grade_ && terms_ == o.terms_;
    }

private:
    static bool is_zero_value(const S& v) { return detail::coeff_is_zero(v); }

    void require_compatible(const Multivector& o) const {
        if (!(metric_ == o.metric_)) throw std::domain_error("metric mismatch");
        if (grade_ != o.grade_)
            throw std::domain_error("grade mismatch: " + std::to_string(grade_) + " vs " + std::to_string(o.grade_));
    }

    Metric metric_;
    int grade_;
    Terms terms_;
};

using RationalMultivector = Multivector<Rational>;

int grade(const auto& a) { return a.grade(); }

namespace detail {
inline void require_same_metric(const Metric& a, const Metric& b) {
    if (!(a == b)) throw std::domain_error("metric mismatch: " + a.to_string() + " vs " + b.to_string());
}
}  // namespace detail

/// sum_I Delta_II a_I b_I. Throws std::domain_error on grade mismatch.
template <class S>
S dot(const Multivector<S>& a, const Multivector<S>& b) {
    detail::require_same_metric(a.metric(), b.metric());
    if (a.grade() != b.grade())
        throw std::domain_error("dot product of grades " + std::to_string(a.grade()) + " and " +
                                std::to_string(b.grade()));
    S sum{};
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& large = &small == &a ? b : a;
    for (const auto& [I, c] : small.terms()) {
        auto it = large.terms().find(I);
        if (it == large.terms().end()) continue;
        sum += signed_value(a.metric().delta(I), S(c * it->second));
    }
    return sum;
}

/// e_I ^ e_J = sigma(I,J) e_{I+J}
template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
    detail::require_same_metric(a.metric(), b.metric());
    Multivector<S> out(a.metric(), a.grade() + b.grade());
    if (out.grade() > a.metric().dim()) return out;
    for (const auto& [I, ca] : a.terms())
        for (const auto& [J, cb] : b.terms()) {
            auto [sign, IJ] = concat_signature(I, J);
            if (sign.is_zero()) continue;
            out.add_term(IJ, signed_value(sign, S(ca * cb)));
        }
    return out;
}

/// e_I _| e_J = Delta_II sigma(J\I, I) e_{J\I} when I is contained in J.
template <class S>
Multivector<S> left_contract(const Multivector<S>& a, const Multivector<S>& b) {
    detail::require_same_metric(a.metric(), b.metric());
    Multivector<S> out(a.metric(), b.grade() - a.grade());
    if (out.grade() < 0) return out;
    for (const auto& [I, ca] : a.terms())
        for (const auto& [J, cb] : b.terms()) {
            auto rest = subtract(J, I);
            if (!rest) continue;
            const Sign s = a.metric().delta(I) * concat_signature(*rest, I).first;
            out.add_term(*rest, signed_value(s, S(ca * cb)));
        }
    return out;
}

/// e_J |_ e_I = Delta_II sigma(I, J\I) e_{J\I} when I is contained in J.
template <class S>
Multivector<S> right_contract(const Multivector<S>& b, const Multivector<S>& a) {
    detail::require_same_metric(a.metric(), b.metric());
    Multivector<S> out(a.metric(), b.grade() - a.grade());
    if (out.grade() < 0) return out;
    for (const auto& [J, cb] : b.terms())
        for (const auto& [I, ca] : a.terms()) {
            auto rest = subtract(J, I);
            if (!rest) continue;
            const Sign s = a.metric().delta(I) * concat_signature(I, *rest).first;
            out.add_term(*rest, signed_value(s, S(cb * ca)));
        }
    return out;
}

/// Hodge complement: e_I^H = Delta_II sigma(I, I^c) e_{I^c}.
template <class S>
Multivector<S> hodge(const Multivector<S>& a) {
    const Metric& m = a.metric();
    Multivector<S> out(m, m.dim() - a.grade());
    for (const auto& [I, c] : a.terms()) {
        IndexList Ic = complement(I, m.dim());
        const Sign s = m.delta(I) * concat_signature(I, Ic).first;
        out.add_term(Ic, signed_value(s, c));
    }
    return out;
}

/// Inverse complement: e_I^{H^-1} = Delta_{I^c I^c} sigma(I^c, I) e_{I^c}.
template <class S>
Multivector<S> inv_hodge(const Multivector<S>& a) {
    const Metric& m = a.metric();
    Multivector<S> out(m, m.dim() - a.grade());
    for (const auto& [I, c] : a.terms()) {
        IndexList Ic = complement(I, m.dim());
        const Sign s = m.delta(Ic) * concat_signature(Ic, I).first;
        out.add_term(Ic, signed_value(s, c));
    }
    return out;
}

}  // namespace extalg
