#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace asurj {

// The coefficient field: arbitrary-precision rationals, kept in lowest terms
// with positive denominator (GMP canonical form). All construction arithmetic
// is exact; floating complex numbers appear only in the witness layer.
using Rational = mpq_class;
using Complex = std::complex<double>;

// Accepts "p" or "p/q" with an optional sign, nothing else.
Rational rational_from_string(std::string_view text);
std::string rational_to_string(const Rational& q);

Rational rational_pow(const Rational& base, unsigned long exp);

inline double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }
inline Complex to_complex(const Rational& q) { return Complex(to_double(q), 0.0); }

bool is_integer(const Rational& q);

}  // namespace asurj
