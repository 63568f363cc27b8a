#pragma once

#include <string>

#include "extalg/field.hpp"
#include "extalg/variational.hpp"

namespace extalg {

/// Canonical text of a field: blade terms in lexicographic order, e.g.
/// "3/2*x0*e[1] - e[2] + (x1 + 1)*e[0,2]". Grade 0 prints the polynomial,
/// the zero field prints "0".
std::string format_field(const MvField& a);
std::string format_multivector(const RationalMultivector& a);
std::string format_matrix(const MvMatrixField& A);

/// "e[0,2]"; "e[]" for the scalar blade.
std::string format_blade(const IndexList& I);

/// Text names of operators in derived equations ("d^", "d_|", "lap", ...).
std::string op_symbol(FieldOp op);

/// "d_| ( d^ A )" for ops {Int, Ext} on A.
std::string format_operator_chain(const std::vector<FieldOp>& ops, const std::string& symbol);
/// "J - 1/2 * d^ ( d_| A )"; "0" when empty.
std::string format_expr(const FormalExpr& e);
/// "lhs = rhs"
std::string format_equation(const FieldEquation& eq);

}  // namespace extalg
