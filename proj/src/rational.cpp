#include "asurj/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace asurj {

Rational rational_from_string(std::string_view text) {
  size_t i = 0;
  auto fail = [&]() -> void {
    throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  std::string num, den;
  if (text[i] == '+' || text[i] == '-') {
    if (text[i] == '-') num += '-';
    ++i;
  }
  size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num += text[i++];
    ++digits;
  }
  if (digits == 0) fail();
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      den += text[i++];
      ++digits;
    }
    if (digits == 0 || i != text.size()) fail();
  }
  mpz_class n(num, 10);
  mpz_class d(den.empty() ? "1" : den, 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& base, unsigned long exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
  return Rational(num, den);  // already canonical: base was
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace asurj
