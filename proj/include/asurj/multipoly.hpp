#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "asurj/rational.hpp"

namespace asurj {

// Exponent vector of a monomial; its length equals the owning polynomial's
// variable count. Variables are 1-indexed in the API and render as z1..zn.
using Exponents = std::vector<int>;

inline int exponent_sum(const Exponents& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// Graded lexicographic order, largest term first, so map iteration yields the
// canonical printing order directly.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = exponent_sum(a);
    const int db = exponent_sum(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored zero coefficients, exponent vectors unique and of
// length num_vars(); the zero polynomial is the empty term map.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  explicit MultiPoly(int num_vars);  // the zero polynomial
  static MultiPoly constant(int num_vars, const Rational& c);
  static MultiPoly variable(int num_vars, int index);  // 1-based
  static MultiPoly monomial(int num_vars, Exponents exps, const Rational& c);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }

  // Total degree. std::nullopt is the distinguished marker for the zero
  // polynomial (never -1, so nothing downstream can silently do arithmetic
  // with it).
  std::optional<int> total_degree() const;
  int degree_in(int index) const;  // 0 for the zero polynomial

  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& exps) const;
  Rational constant_term() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;
  MultiPoly pow(int exp) const;

  // Evaluation is a direct term sum with per-variable power caches: exact for
  // rational points, IEEE double for complex points (non-finite results
  // throw NonFiniteError).
  Rational eval(std::span<const Rational> point) const;
  Complex eval(std::span<const Complex> point) const;

  // Exact composition: variable i is replaced by images[i-1]. All images must
  // share a variable count, which becomes the result's.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  // True when every term has zero exponent on variables 1..first_allowed-1.
  bool uses_only_variables_at_least(int first_allowed) const;
  bool is_univariate_in(int index) const;
  // Dense coefficients c0..cd of a polynomial univariate in `index`.
  std::vector<Rational> univariate_coeffs(int index) const;

  // Accumulate c onto the coefficient of exps, dropping the term if it
  // cancels to zero.
  void add_term(const Exponents& exps, const Rational& c);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  int num_vars_;
  TermMap terms_;
};

MultiPoly operator+(MultiPoly a, const MultiPoly& b);
MultiPoly operator-(MultiPoly a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rational& c, MultiPoly p);

// Same polynomial viewed in a larger variable ring (exponents padded).
MultiPoly embedded(const MultiPoly& p, int new_num_vars);

}  // namespace asurj
