#pragma once

#include <vector>

#include "asurj/rational.hpp"

namespace asurj {

// Univariate complex polynomial, coefficients ascending, trimmed so the
// leading coefficient is nonzero (the zero polynomial is the empty list).
class UniPolyC {
 public:
  UniPolyC() = default;
  explicit UniPolyC(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 when zero
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex eval(Complex z) const;  // Horner
  UniPolyC derivative() const;
  double coefficient_scale() const;  // max |c_i|, 0 for the zero polynomial

 private:
  std::vector<Complex> coeffs_;
};

struct RootSet {
  std::vector<Complex> roots;  // with multiplicity, size == degree
  double max_residual = 0.0;   // max |p(root)| over the returned roots
};

// All complex roots by Aberth-Ehrlich simultaneous iteration followed by
// Newton polishing. Initial guesses sit on the Cauchy-bound circle
// (radius 1 + max|a_i/a_d|) at fixed angular offsets — no randomness, so runs
// are reproducible. Convergence target: |p(root)| <= tol * coefficient_scale
// for every root. Throws std::invalid_argument for degree < 1 and
// RootFindingError when max_iter sweeps do not reach the target.
RootSet find_all_roots(const UniPolyC& p, double tol = 1e-10, int max_iter = 200);

// Same iteration, but never throws on non-convergence: returns the polished
// iterates as they stand, with max_residual reporting how good they are. For
// callers that post-validate every candidate through an independent check
// (clustered roots can sit above any double-precision residual target while
// the well-separated ones still polish to machine accuracy).
RootSet find_roots_best_effort(const UniPolyC& p, int max_iter = 400);

struct PolishResult {
  Complex root;
  bool converged = false;
  bool derivative_stalled = false;  // Newton hit p'(z) = 0 away from a root
};

// Newton refinement from a seed; returns the best iterate seen. `tol` is
// relative to the coefficient scale, like find_all_roots.
PolishResult polish_root(const UniPolyC& p, Complex seed, double tol = 1e-12,
                         int max_iter = 60);

// Collapses roots closer than `spacing` (first occurrence wins). For callers
// that need some root of each cluster, not root structure.
std::vector<Complex> dedupe_roots(const std::vector<Complex>& roots,
                                  double spacing = 1e-7);

}  // namespace asurj
