#pragma once

#include "extalg/matrix.hpp"
#include "extalg/multivector.hpp"
#include "extalg/polynomial.hpp"

namespace extalg {

/// Multivector field with polynomial components in the coordinates x_i.
using MvField = Multivector<Polynomial>;
/// Matrix field; houses tensor derivatives and their vector derivatives.
using MvMatrixField = MvMatrix<Polynomial>;

/// d/dx_i with the index checked against the metric's dimension.
Polynomial partial(const Polynomial& f, int i, const Metric& metric);

/// Component-wise d/dx_i of a field.
MvField partial(const MvField& a, int i);
MvMatrixField partial(const MvMatrixField& A, int i);

/// Embeds a constant multivector as a field.
MvField to_field(const RationalMultivector& a);
MvMatrixField to_field(const RationalMatrix& A);
bool is_constant(const MvField& a);

/// d ^ a = sum_{i not in I} Delta_ii sigma(i,I) d_i a_I e_{i+I}
MvField ext_deriv(const MvField& a);
/// d _| a = sum_{i in I} sigma(I\i, i) d_i a_I e_{I\i}
MvField int_deriv(const MvField& a);
/// a |_ d, the derivative acting from the right through the right contraction.
MvField right_int_deriv(const MvField& a);
/// d (x) a = sum Delta_ii d_i a_I w_{i,I}
MvMatrixField tensor_deriv(const MvField& a);
/// d x B for a matrix field with row grade 1: sum_i (Delta_ii e_i) x d_i B.
MvField matrix_divergence(const MvMatrixField& B);
/// (d.d) a = sum_i Delta_ii d_i^2 a_I e_I, component-wise.
MvField laplacian(const MvField& a);

/// d_|(d^a) - d^(d_|a) == (-1)^gr(a) (d.d)a, evaluated exactly on `a`.
bool laplacian_splitting_holds(const MvField& a);

/// Scalar part of a grade-0 field. Throws std::domain_error for other grades.
Polynomial scalar_part(const MvField& a);

}  // namespace extalg
