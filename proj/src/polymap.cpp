#include "asurj/polymap.hpp"

#include <stdexcept>

namespace asurj {

PolyMap::PolyMap(std::vector<MultiPoly> components)
    : num_vars_(static_cast<int>(components.size())), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("PolyMap: needs at least one component");
  for (const MultiPoly& c : components_)
    if (c.num_vars() != num_vars_)
      throw std::invalid_argument("PolyMap: every component must be a polynomial in n variables");
}

PolyMap PolyMap::identity(int n) {
  std::vector<MultiPoly> comps;
  comps.reserve(n);
  for (int i = 1; i <= n; ++i) comps.push_back(MultiPoly::variable(n, i));
  return PolyMap(std::move(comps));
}

std::optional<int> PolyMap::degree() const {
  std::optional<int> d;
  for (const MultiPoly& c : components_)
    if (auto cd = c.total_degree())
      d = d ? std::max(*d, *cd) : *cd;
  return d;
}

bool PolyMap::is_identity() const { return *this == identity(num_vars_); }

std::vector<Rational> PolyMap::eval(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const MultiPoly& c : components_) out.push_back(c.eval(point));
  return out;
}

std::vector<Complex> PolyMap::eval(std::span<const Complex> point) const {
  std::vector<Complex> out;
  out.reserve(components_.size());
  for (const MultiPoly& c : components_) out.push_back(c.eval(point));
  return out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.num_vars() != inner.num_vars())
    throw std::invalid_argument("compose: arity mismatch");
  std::vector<MultiPoly> comps;
  comps.reserve(outer.components().size());
  for (const MultiPoly& c : outer.components())
    comps.push_back(c.substitute(inner.components()));
  return PolyMap(std::move(comps));
}

}  // namespace asurj
