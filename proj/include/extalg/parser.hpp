#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "extalg/field.hpp"
#include "extalg/variational.hpp"

namespace extalg {

/// Syntax or type error with the byte offset into the source text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Evaluates an algebra expression over the given metric.
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (op factor)*         op := '^' | '.' | '_|' | '|_' | '*'
///   factor := rational | blade | poly | 'hodge(' expr ')' | 'invhodge(' expr ')'
///           | 'd^' factor | 'd_|' factor | '(' expr ')'
///   blade  := 'e[' [digits (',' digits)*] ']'
///   poly   := 'x' digits ['^' digits]     (no space before the exponent)
///
/// All binary operators share one precedence level and associate to the
/// left. '*' multiplies by a scalar (grade-0) operand.
MvField parse_expr(std::string_view text, const Metric& metric);

/// Parses `c*(D f . D g) + ...` with D one of "", "d^", "d_|", "dX". The
/// dynamical field is given; every other name is a source whose grade is
/// inferred from the term it shares with the dynamical field.
LagrangianDensity parse_lagrangian(std::string_view text, const Metric& metric, const FieldSymbol& dynamical);

}  // namespace extalg
