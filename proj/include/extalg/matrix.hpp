#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "extalg/multivector.hpp"

namespace extalg {

/// Sparse matrix over the basis w_{I,J} = e_I (x) e_J with |I| = row grade and
/// |J| = column grade.
template <class S>
class MvMatrix {
public:
    using Key = std::pair<IndexList, IndexList>;
    using Terms = std::map<Key, S>;

    MvMatrix(Metric metric, int row_grade, int col_grade)
        : metric_(metric), row_grade_(row_grade), col_grade_(col_grade) {}

    static MvMatrix basis(Metric metric, const IndexList& I, const IndexList& J, S coeff = S(1)) {
        MvMatrix out(metric, static_cast<int>(I.size()), static_cast<int>(J.size()));
        out.add_term(I, J, coeff);
        return out;
    }

    const Metric& metric() const { return metric_; }
    int row_grade() const { return row_grade_; }
    int col_grade() const { return col_grade_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(const IndexList& I, const IndexList& J) const {
        auto it = terms_.find(Key{I, J});
        return it == terms_.end() ? S() : it->second;
    }

    void add_term(const IndexList& I, const IndexList& J, const S& coeff) {
        if (static_cast<int>(I.size()) != row_grade_ || static_cast<int>(J.size()) != col_grade_)
            throw std::domain_error("matrix key " + I.to_string() + J.to_string() + " does not match grades (" +
                                    std::to_string(row_grade_) + "," + std::to_string(col_grade_) + ")");
        if (I.span_dimension() > metric_.dim() || J.span_dimension() > metric_.dim())
            throw std::domain_error("matrix key outside dimension " + std::to_string(metric_.dim()));
        if (detail::coeff_is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(Key{I, J}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    MvMatrix& operator+=(const MvMatrix& o) {
        require_compatible(o);
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
        return *this;
    }
    MvMatrix& operator-=(const MvMatrix& o) {
        require_compatible(o);
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, S(-c));
        return *this;
    }
    friend MvMatrix operator+(MvMatrix a, const MvMatrix& b) { return a += b; }
    friend MvMatrix operator-(MvMatrix a, const MvMatrix& b) { return a -= b; }

    MvMatrix scaled(const S& factor) const {
        MvMatrix out(metric_, row_grade_, col_grade_);
        for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, c * factor);
        return out;
    }

    bool operator==(const MvMatrix& o) const {
        return metric_ == o.metric_ && row_grade_ == o.row_grade_ && col_grade_ == o.col_grade_ &&
               terms_ == o.terms_;
    }

private:
    void require_compatible(const MvMatrix& o) const {
        if (!(metric_ == o.metric_)) throw std::domain_error("metric mismatch");
        if (row_grade_ != o.row_grade_ || col_grade_ != o.col_grade_)
            throw std::domain_error("matrix grade mismatch");
    }

    Metric metric_;
    int row_grade_;
    int col_grade_;
    Terms terms_;
};

using RationalMatrix = MvMatrix<Rational>;

/// w_{I1,I2} . w_{J1,J2} = Delta_{I1 J1} Delta_{I2 J2}
template <class S>
S mat_dot(const MvMatrix<S>& A, const MvMatrix<S>& B) {
    detail::require_same_metric(A.metric(), B.metric());
    if (A.row_grade() != B.row_grade() || A.col_grade() != B.col_grade())
        throw std::domain_error("matrix dot product of mismatched grades");
    S sum{};
    for (const auto& [key, a] : A.terms()) {
        auto it = B.terms().find(key);
        if (it == B.terms().end()) continue;
        const Sign s = A.metric().delta(key.first) * A.metric().delta(key.second);
        sum += signed_value(s, S(a * it->second));
    }
    return sum;
}

/// w_{I,J} x w_{K,L} = Delta_JK w_{I,L}
template <class S>
MvMatrix<S> mat_mul(const MvMatrix<S>& A, const MvMatrix<S>& B) {
    detail::require_same_metric(A.metric(), B.metric());
    if (A.col_grade() != B.row_grade())
        throw std::domain_error("matrix product needs column grade " + std::to_string(A.col_grade()) +
                                " to equal row grade " + std::to_string(B.row_grade()));
    MvMatrix<S> out(A.metric(), A.row_grade(), B.col_grade());
    for (const auto& [ka, a] : A.terms())
        for (const auto& [kb, b] : B.terms()) {
            if (ka.second != kb.first) continue;
            out.add_term(ka.first, kb.second, signed_value(A.metric().delta(ka.second), S(a * b)));
        }
    return out;
}

/// w_{I,J} x e_K = Delta_JK e_I
template <class S>
Multivector<S> mat_vec(const MvMatrix<S>& A, const Multivector<S>& v) {
    detail::require_same_metric(A.metric(), v.metric());
    if (A.col_grade() != v.grade())
        throw std::domain_error("matrix-vector product needs column grade " + std::to_string(A.col_grade()) +
                                " to equal vector grade " + std::to_string(v.grade()));
    Multivector<S> out(A.metric(), A.row_grade());
    for (const auto& [key, a] : A.terms()) {
        auto it = v.terms().find(key.second);
        if (it == v.terms().end()) continue;
        out.add_term(key.first, signed_value(A.metric().delta(key.second), S(a * it->second)));
    }
    return out;
}

/// e_K x w_{J,I} = Delta_JK e_I
template <class S>
Multivector<S> vec_mat(const Multivector<S>& v, const MvMatrix<S>& A) {
    detail::require_same_metric(A.metric(), v.metric());
    if (A.row_grade() != v.grade())
        throw std::domain_error("vector-matrix product needs row grade " + std::to_string(A.row_grade()) +
                                " to equal vector grade " + std::to_string(v.grade()));
    Multivector<S> out(A.metric(), A.col_grade());
    for (const auto& [key, a] : A.terms()) {
        auto it = v.terms().find(key.first);
        if (it == v.terms().end()) continue;
        out.add_term(key.second, signed_value(A.metric().delta(key.first), S(it->second * a)));
    }
    return out;
}

template <class S>
MvMatrix<S> transpose(const MvMatrix<S>& A) {
    MvMatrix<S> out(A.metric(), A.col_grade(), A.row_grade());
    for (const auto& [key, a] : A.terms()) out.add_term(key.second, key.first, a);
    return out;
}

/// I_l = sum_I Delta_II w_{I,I}
template <class S = Rational>
MvMatrix<S> identity_matrix(const Metric& metric, int grade) {
    MvMatrix<S> out(metric, grade, grade);
    for (const auto& I : all_index_lists(metric.dim(), grade))
        out.add_term(I, I, signed_value(metric.delta(I), S(1)));
    return out;
}

}  // namespace extalg
