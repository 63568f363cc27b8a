#include "extalg/field.hpp"

#include <stdexcept>

namespace extalg {

Polynomial partial(const Polynomial& f, int i, const Metric& metric) {
    if (i < 0 || i >= metric.dim())
        throw std::domain_error("derivative index " + std::to_string(i) + " outside [0, " +
                                std::to_string(metric.dim()) + ")");
    return f.partial(i);
}

MvField partial(const MvField& a, int i) {
    return a.map_coefficients([&](const Polynomial& c) { return partial(c, i, a.metric()); });
}

MvMatrixField partial(const MvMatrixField& A, int i) {
    MvMatrixField out(A.metric(), A.row_grade(), A.col_grade());
    for (const auto& [key, c] : A.terms()) out.add_term(key.first, key.second, partial(c, i, A.metric()));
    return out;
}

MvField to_field(const RationalMultivector& a) {
    MvField out(a.metric(), a.grade());
    for (const auto& [I, c] : a.terms()) out.add_term(I, Polynomial(c));
    return out;
}

MvMatrixField to_field(const RationalMatrix& A) {
    MvMatrixField out(A.metric(), A.row_grade(), A.col_grade());
    for (const auto& [key, c] : A.terms()) out.add_term(key.first, key.second, Polynomial(c));
    return out;
}

bool is_constant(const MvField& a) {
    for (const auto& [I, c] : a.terms())
        if (!c.is_constant()) return false;
    return true;
}

MvField ext_deriv(const MvField& a) {
    const Metric& m = a.metric();
    MvField out(m, a.grade() + 1);
    if (out.grade() > m.dim()) return out;
    for (const auto& [I, c] : a.terms())
        for (int i = 0; i < m.dim(); ++i) {
            if (I.contains(i)) continue;
            auto [sigma, iI] = concat_signature(IndexList::single(i), I);
            out.add_term(iI, signed_value(m.delta(i) * sigma, c.partial(i)));
        }
    return out;
}

MvField int_deriv(const MvField& a) {
    const Metric& m = a.metric();
    MvField out(m, a.grade() - 1);
    if (out.grade() < 0) return out;
    for (const auto& [I, c] : a.terms())
        for (int i : I) {
            const IndexList single = IndexList::single(i);
            IndexList rest = *subtract(I, single);
            out.add_term(rest, signed_value(concat_signature(rest, single).first, c.partial(i)));
        }
    return out;
}

MvField right_int_deriv(const MvField& a) {
    const Metric& m = a.metric();
    MvField out(m, a.grade() - 1);
    if (out.grade() < 0) return out;
    for (int i = 0; i < m.dim(); ++i) {
        const MvField d_i = MvField::blade(m, IndexList::single(i), signed_value(m.delta(i), Polynomial(1)));
        out += right_contract(partial(a, i), d_i);
    }
    return out;
}

MvMatrixField tensor_deriv(const MvField& a) {
    const Metric& m = a.metric();
    MvMatrixField out(m, 1, a.grade());
    for (const auto& [I, c] : a.terms())
        for (int i = 0; i < m.dim(); ++i)
            out.add_term(IndexList::single(i), I, signed_value(m.delta(i), c.partial(i)));
    return out;
}

MvField matrix_divergence(const MvMatrixField& B) {
    const Metric& m = B.metric();
    if (B.row_grade() != 1) throw std::domain_error("matrix divergence needs row grade 1");
    MvField out(m, B.col_grade());
    for (int i = 0; i < m.dim(); ++i) {
        const MvField d_i = MvField::blade(m, IndexList::single(i), signed_value(m.delta(i), Polynomial(1)));
        out += vec_mat(d_i, partial(B, i));
    }
    return out;
}

MvField laplacian(const MvField& a) {
    const Metric& m = a.metric();
    return a.map_coefficients([&](const Polynomial& c) {
        Polynomial sum;
        for (int i = 0; i < m.dim(); ++i) sum += signed_value(m.delta(i), c.partial(i).partial(i));
        return sum;
    });
}

Polynomial scalar_part(const MvField& a) {
    if (a.grade() != 0) throw std::domain_error("scalar part of a grade-" + std::to_string(a.grade()) + " field");
    return a.coefficient(IndexList());
}

bool laplacian_splitting_holds(const MvField& a) {
    const MvField lhs = int_deriv(ext_deriv(a)) - ext_deriv(int_deriv(a));
    const MvField lap = laplacian(a);
    return lhs == (a.grade() % 2 == 0 ? lap : -lap);
}

}  // namespace extalg
