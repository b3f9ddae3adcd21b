#pragma once

#include <span>
#include <vector>

#include "asurj/multipoly.hpp"

namespace asurj {

// Polynomial endomorphism of affine n-space: n components, each a polynomial
// in the same n variables. The degree of a map is the maximum component total
// degree (the convention used by every bound check in this library).
class PolyMap {
 public:
  explicit PolyMap(std::vector<MultiPoly> components);
  static PolyMap identity(int n);

  int num_vars() const { return num_vars_; }
  const std::vector<MultiPoly>& components() const { return components_; }
  const MultiPoly& component(int i) const { return components_[i - 1]; }  // 1-based

  std::optional<int> degree() const;  // nullopt only for the all-zero map
  bool is_identity() const;

  std::vector<Rational> eval(std::span<const Rational> point) const;
  std::vector<Complex> eval(std::span<const Complex> point) const;

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.num_vars_ == b.num_vars_ && a.components_ == b.components_;
  }
  friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

 private:
  int num_vars_;
  std::vector<MultiPoly> components_;
};

// outer ∘ inner, exact componentwise substitution.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

}  // namespace asurj
