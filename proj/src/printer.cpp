#include "extalg/printer.hpp"

namespace extalg {

namespace {

// Appends a signed piece ("-x" or "x") to a sum.
void append_signed(std::string& out, const std::string& piece) {
    const bool negative = !piece.empty() && piece.front() == '-';
    if (out.empty()) {
        out = piece;
        return;
    }
    out += negative ? " - " : " + ";
    out += negative ? piece.substr(1) : piece;
}

// coeff * rest, with unit coefficients elided.
std::string scaled_piece(const Polynomial& c, const std::string& rest) {
    if (c == Polynomial(1)) return rest;
    if (c == Polynomial(-1)) return "-" + rest;
    if (c.size() == 1) return c.to_string() + "*" + rest;
    return "(" + c.to_string() + ")*" + rest;
}

}  // namespace

std::string format_blade(const IndexList& I) {
    std::string s = "e[";
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(I[i]);
    }
    return s + "]";
}

std::string format_field(const MvField& a) {
    if (a.is_zero()) return "0";
    if (a.grade() == 0) return a.coefficient(IndexList()).to_string();
    std::string out;
    for (const auto& [I, c] : a.terms()) append_signed(out, scaled_piece(c, format_blade(I)));
    return out;
}

std::string format_multivector(const RationalMultivector& a) { return format_field(to_field(a)); }

std::string format_matrix(const MvMatrixField& A) {
    if (A.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : A.terms()) {
        std::string w = "w[" + format_blade(key.first).substr(1) + "," + format_blade(key.second).substr(1) + "]";
        append_signed(out, scaled_piece(c, w));
    }
    return out;
}

std::string op_symbol(FieldOp op) {
    switch (op) {
        case FieldOp::Ext: return "d^";
        case FieldOp::Int: return "d_|";
        case FieldOp::Lap: return "lap";
        case FieldOp::Tensor: return "dX";
        case FieldOp::MatDiv: return "div";
    }
    return "?";
}

std::string format_operator_chain(const std::vector<FieldOp>& ops, const std::string& symbol) {
    std::string inner = symbol;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const bool wrap = it != ops.rbegin();
        inner = op_symbol(*it) + (wrap ? " ( " + inner + " )" : " " + inner);
    }
    return inner;
}

std::string format_expr(const FormalExpr& e) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& t : e.terms()) {
        const std::string chain = format_operator_chain(t.ops, t.symbol);
        const bool negative = sgn(t.coeff) < 0;
        const Rational mag = abs(t.coeff);
        std::string piece = mag == 1 ? chain : to_string(mag) + " * " + chain;
        if (out.empty()) {
            out = negative ? "-" + piece : piece;
        } else {
            out += negative ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

std::string format_equation(const FieldEquation& eq) { return format_expr(eq.lhs) + " = " + format_expr(eq.rhs); }

}  // namespace extalg
