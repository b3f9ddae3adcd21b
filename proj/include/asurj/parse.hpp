#pragma once

#include <span>
#include <string>
#include <string_view>

#include "asurj/errors.hpp"
#include "asurj/polymap.hpp"

namespace asurj {

// Recursive-descent parser for the canonical polynomial syntax:
//   variables z1..zn or w1..wn, rational literals p or p/q,
//   operators + - * ^, parentheses; ^ takes a non-negative integer literal;
//   no implicit multiplication. Whitespace-insensitive.
// Throws ParseError with line/column on bad input.
MultiPoly parse_poly(std::string_view text, int num_vars);

// Canonical printer: graded-lex term order, explicit '*', exact rational
// coefficients. parse_poly(print_poly(p), p.num_vars()) == p.
std::string print_poly(const MultiPoly& p, char letter = 'z');
std::string print_map(const PolyMap& f, char letter = 'z');
// 1-variable polynomial rendered with an explicit variable name (residual
// polynomials live in z2 even though they are stored with one variable).
std::string print_poly_univariate(const MultiPoly& p, std::string_view var_name);

// Comma-separated rational literals, e.g. "1,-2/3,0".
std::vector<Rational> parse_rational_point(std::string_view text);
// Comma-separated complex literals: "1.5", "2i", "1+2i", "-0.5-1i", "3/2".
std::vector<Complex> parse_complex_point(std::string_view text);
// True when every coordinate is a rational literal (exact path applies).
bool point_is_rational(std::string_view text);

std::string format_complex(Complex z);
std::string format_point(std::span<const Complex> z);
std::string format_point(std::span<const Rational> z);

}  // namespace asurj
