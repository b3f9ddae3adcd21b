#include "asurj/multipoly.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "asurj/errors.hpp"

namespace asurj {

MultiPoly::MultiPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("MultiPoly: num_vars must be positive");
}

MultiPoly MultiPoly::constant(int num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  if (c != 0) p.terms_.emplace(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index) {
  if (index < 1 || index > num_vars)
    throw std::invalid_argument("MultiPoly: variable index out of range");
  MultiPoly p(num_vars);
  Exponents e(num_vars, 0);
  e[index - 1] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(int num_vars, Exponents exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != num_vars)
    throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  MultiPoly p(num_vars);
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

std::optional<int> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // grlex-descending: the first term is maximal
  return exponent_sum(terms_.begin()->first);
}

int MultiPoly::degree_in(int index) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index - 1]);
  return d;
}

Rational MultiPoly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coeff(Exponents(num_vars_, 0)); }

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  assert(static_cast<int>(exps.size()) == num_vars_);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.num_vars_ != num_vars_)
    throw std::invalid_argument("MultiPoly: variable-count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.num_vars_ != num_vars_)
    throw std::invalid_argument("MultiPoly: variable-count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
  a += b;
  return a;
}

MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
  a -= b;
  return a;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("MultiPoly: variable-count mismatch");
  MultiPoly out(a.num_vars());
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < a.num_vars(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(const Rational& c, MultiPoly p) {
  p *= c;
  return p;
}

MultiPoly MultiPoly::pow(int exp) const {
  if (exp < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  MultiPoly result = constant(num_vars_, Rational(1));
  MultiPoly base = *this;
  while (exp > 0) {
    if (exp & 1) result = result * base;
    exp >>= 1;
    if (exp) base = base * base;
  }
  return result;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw std::invalid_argument("MultiPoly: point dimension mismatch");
  std::vector<std::vector<Rational>> pows(num_vars_);
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < num_vars_; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      auto& pv = pows[i];
      if (pv.empty()) pv.push_back(Rational(1));
      while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * point[i]);
      t *= pv[k];
    }
    acc += t;
  }
  return acc;
}

Complex MultiPoly::eval(std::span<const Complex> point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw std::invalid_argument("MultiPoly: point dimension mismatch");
  std::vector<std::vector<Complex>> pows(num_vars_);
  Complex acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    Complex t = to_complex(c);
    for (int i = 0; i < num_vars_; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      auto& pv = pows[i];
      if (pv.empty()) pv.push_back(Complex(1.0, 0.0));
      while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * point[i]);
      t *= pv[k];
    }
    acc += t;
  }
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
    throw NonFiniteError("MultiPoly::eval: non-finite result");
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (static_cast<int>(images.size()) != num_vars_)
    throw std::invalid_argument("MultiPoly: substitution arity mismatch");
  const int m = images[0].num_vars();
  for (const MultiPoly& img : images)
    if (img.num_vars() != m)
      throw std::invalid_argument("MultiPoly: images must share a variable count");
  // term sum with memoized image powers; the linear power chain keeps
  // intermediates as sparse as possible
  std::vector<std::vector<MultiPoly>> pows(num_vars_);
  MultiPoly acc(m);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(m, c);
    for (int i = 0; i < num_vars_; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      auto& pv = pows[i];
      if (pv.empty()) pv.push_back(constant(m, Rational(1)));
      while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * images[i]);
      t = t * pv[k];
    }
    acc += t;
  }
  return acc;
}

bool MultiPoly::uses_only_variables_at_least(int first_allowed) const {
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < first_allowed - 1 && i < num_vars_; ++i)
      if (e[i] != 0) return false;
  return true;
}

bool MultiPoly::is_univariate_in(int index) const {
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < num_vars_; ++i)
      if (i != index - 1 && e[i] != 0) return false;
  return true;
}

std::vector<Rational> MultiPoly::univariate_coeffs(int index) const {
  if (!is_univariate_in(index))
    throw std::invalid_argument("MultiPoly: not univariate in the requested variable");
  std::vector<Rational> out(degree_in(index) + 1, Rational(0));
  for (const auto& [e, c] : terms_) out[e[index - 1]] = c;
  return out;
}

MultiPoly embedded(const MultiPoly& p, int new_num_vars) {
  if (new_num_vars < p.num_vars())
    throw std::invalid_argument("embedded: cannot shrink the variable ring");
  if (new_num_vars == p.num_vars()) return p;
  MultiPoly out(new_num_vars);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(new_num_vars, 0);
    std::copy(e.begin(), e.end(), ne.begin());
    out.add_term(ne, c);
  }
  return out;
}

}  // namespace asurj
