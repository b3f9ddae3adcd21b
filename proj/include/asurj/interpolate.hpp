#pragma once

#include <span>
#include <utility>

#include "asurj/multipoly.hpp"

namespace asurj {

// Exact Lagrange interpolation: the unique polynomial of degree <= l-1
// through l nodes with pairwise distinct x-values, as a 1-variable MultiPoly.
// Throws std::invalid_argument on duplicate x-values or an empty node list.
MultiPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> nodes);

}  // namespace asurj
