#pragma once

#include <string>
#include <vector>

#include "asurj/multipoly.hpp"

namespace asurj {

// The avoided set Z = F x W. F is a finite list of rational points — in the
// plane for the product pipeline, in A^n for the point pipeline. W is the
// common zero set of polynomials q_1..q_m in variables z3..zn (stored in the
// full n-variable ring with zero exponents on z1, z2).
struct ZSpec {
  int n = 2;
  std::vector<std::vector<Rational>> points;  // all the same length: 2 or n
  std::vector<MultiPoly> w_polys;             // num_vars == n, variables z3..zn only

  int l() const { return static_cast<int>(points.size()); }
  int m() const { return static_cast<int>(w_polys.size()); }
  int point_dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }

  // Max total degree over the nonzero q_i; 0 when there are none.
  int max_w_degree() const;

  // Deduplicates points (first occurrence wins, one note per drop) and checks
  // all invariants; throws std::invalid_argument on violation.
  void canonicalize(std::vector<std::string>* notes = nullptr);
};

}  // namespace asurj
