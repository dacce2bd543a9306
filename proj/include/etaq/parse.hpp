#ifndef ETAQ_PARSE_HPP
#define ETAQ_PARSE_HPP

#include <optional>
#include <string>
#include <utility>

#include "etaq/biform.hpp"
#include "etaq/field.hpp"

namespace etaq {

/*
 * Expression grammar shared by scalar literals and curve equations:
 *
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*      '/' needs a constant divisor
 *   factor := atom ['^' natural]
 *   atom   := natural | 'x0'|'x1'|'y0'|'y1' | 'z'<m> | '(' expr ')'
 *
 * Whitespace is insignificant.  'z<m>' denotes the generator of Q(z<m>) and
 * is only legal when the coefficient field is that cyclotomic field.
 */

// Bihomogeneous form from an expression; rejects non-bihomogeneous input
// naming the offending pair of monomials.
BiForm parse_biform(const std::string& text, const FieldSpec& field,
                    std::optional<std::pair<int, int>> expected_bidegree = std::nullopt);

// Constant expression (no x/y variables allowed).
Scalar parse_scalar(const std::string& text, const FieldSpec& field);

// Deterministic printing, monomials ordered by (i descending, j descending);
// parses back to an equal form.
std::string to_expression(const BiForm& h);

} // namespace etaq

#endif
