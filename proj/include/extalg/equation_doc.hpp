#pragma once

#include <string>
#include <string_view>

#include "extalg/variational.hpp"

namespace extalg {

/// Single-line JSON document for an equation:
/// {"metric":{"k":1,"n":3},"grade":1,"lhs":[{"coeff":"1/1","ops":["int","ext"],"symbol":"A"}],
///  "rhs":[...],"symbols":[{"name":"A","grade":1,"role":"dynamical"}, ...]}
/// Operators are listed outermost first; coefficients are always "p/q".
std::string equation_to_json(const FieldEquation& eq);

/// Inverse of equation_to_json. Throws std::invalid_argument on malformed
/// documents.
FieldEquation equation_from_json(std::string_view text);

}  // namespace extalg
