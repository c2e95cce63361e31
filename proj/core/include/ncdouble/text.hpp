#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ncdouble/matrixrel.hpp"

namespace ncd {

/// Parses an element of the free algebra on `alphabet`.
///
///   expr   := ("+"|"-")? term (("+"|"-") term)*
///   term   := factor (("*" | "/" | juxtaposition) factor)*
///   factor := atom ("^" uint)?
///   atom   := name | number | "(" expr ")"
///
/// Names are matched longest-first against the generator names, the declared
/// parameters and "i", so "k_1^1" is one generator when it is declared.
/// Generators win over parameters of the same spelling. Juxtaposition and "/"
/// make the canonical printed forms ("(q + 1) x y", "-h/2 dt") re-parse; the
/// divisor must be a nonzero scalar.
///
/// Throws SyntaxError with a byte offset (an unclosed group is reported at its
/// first content character) and UnknownGenerator.
NCPoly parse_expression(std::string_view text, const AlphabetPtr& alphabet);

/// Same grammar without generators.
Scalar parse_scalar(std::string_view text);

/// Two-leg matrix expression, e.g. "R K[1] R K[1] - K[1] R K[1] R".
/// Atoms are scalars as above, numeric matrices from `matrices` (with
/// "NAME^-1" for the inverse and "NAME^n" for powers) and generator matrices
/// "stem[1]" / "stem[2]" built from "stem_i^j" (or vectors from "stem_i")
/// for i, j = 1..N.
LegExpr parse_leg_expression(std::string_view text, const AlphabetPtr& alphabet,
                             const std::map<std::string, ScalarMatrix>& matrices, std::size_t N);

}  // namespace ncd
