#include "asurj/interpolate.hpp"

#include <stdexcept>

namespace asurj {

MultiPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> nodes) {
  if (nodes.empty())
    throw std::invalid_argument("lagrange_interpolate: need at least one node");
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i].first == nodes[j].first)
        throw std::invalid_argument("lagrange_interpolate: duplicate x-values");

  const MultiPoly z = MultiPoly::variable(1, 1);
  MultiPoly acc(1);
  for (size_t j = 0; j < nodes.size(); ++j) {
    if (nodes[j].second == 0) continue;
    MultiPoly basis = MultiPoly::constant(1, Rational(1));
    Rational denom(1);
    for (size_t k = 0; k < nodes.size(); ++k) {
      if (k == j) continue;
      basis = basis * (z - MultiPoly::constant(1, nodes[k].first));
      denom *= nodes[j].first - nodes[k].first;
    }
    acc += Rational(nodes[j].second / denom) * basis;
  }
  return acc;
}

}  // namespace asurj
