#ifndef PREMON_KEXPR_HPP
#define PREMON_KEXPR_HPP

#include <string>

#include "premon/algebra.hpp"
#include "premon/ncpoly.hpp"

namespace premon {

// Parses a polynomial expression over the algebra's generators.
// Grammar: rationals, generator names, +, -, *, integer powers via ^,
// parentheses. Division only by integer literals; never by generators.
// Throws ParseError with position info.
NCPolynomial parse_poly_expr(const std::string& text, const AlgebraPtr& algebra);

} // namespace premon

#endif
