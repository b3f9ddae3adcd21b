#pragma once

#include <span>
#include <vector>

#include "asurj/triangular.hpp"
#include "asurj/zspec.hpp"

namespace asurj {

enum class Family { LemmaG, TheoremF, PropSigma, ExampleManyPoints };
const char* family_name(Family f);
Family family_from_name(const std::string& name);

// A constructed map together with its full factorization. full_map equals the
// post_autos, applied in listed order on the target side, composed over
// core_map; the preimage solver and the verifier consume bundles as a unit.
struct ConstructionBundle {
  Family family = Family::TheoremF;
  int n = 2;
  PolyMap core_map;
  std::vector<TriangularAuto> post_autos;
  PolyMap full_map;
  std::vector<Rational> betas;  // roots of r, pairwise distinct
  MultiPoly r_poly;             // 1-variable monic, equals prod (z1 - beta_j)
  ZSpec z_normalized;           // avoided-set data in normalized coordinates
  int degree = 0;
  int degree_bound = 0;
  // Filled for the many-points construction only: the full avoided point list.
  std::vector<std::vector<Rational>> complement_points;

  // Exact symbolic checks of every structural invariant; throws
  // std::logic_error on violation. Cheap at the degrees this library targets.
  void check_invariants() const;
};

// Monic with exactly the given simple roots: prod (z1 - beta_j).
MultiPoly build_r(std::span<const Rational> betas);

enum class NormalizeMode { Plane, Full };

struct Normalization {
  TriangularAuto t;                           // same dimension as the points
  std::vector<std::vector<Rational>> points;  // images, first coords pairwise distinct
};

// Finds the smallest integer shear making first coordinates pairwise
// distinct. Plane mode shears z1 by z2 only (coefficient c = 0,1,2,...);
// full mode searches per-coordinate coefficient vectors by increasing
// max-norm. Deterministic; a working shear always exists.
Normalization normalize_first_coords(const std::vector<std::vector<Rational>>& points,
                                     NormalizeMode mode);

// ( z1 + z2(r(z1) z2 + 1) + sum_i z2^{i+1} q_i,  r(z1) z2 + 1,  z3, ..., zn )
PolyMap build_g(const MultiPoly& r, std::span<const MultiPoly> w_polys, int n);

// n = 2:  ( z1 + z2(r z2 + 1),  r z2 + 1 )
// n > 2:  ( z1 + z2(r z2 + 1),  r z2 + 1 + z3,  z3^2 + z4, ..., z_{n-1}^2 + zn,  zn^2 )
PolyMap build_sigma_map(const MultiPoly& r, int n);

// Bundle with core g and no conjugation; avoided set {beta_j} x {0} x V(q_i).
ConstructionBundle build_lemma_bundle(std::span<const Rational> betas,
                                      std::vector<MultiPoly> w_polys, int n);

// Full product pipeline: normalize F in the plane, build r and g, shift by
// the interpolation automorphism h, undo the normalizer. Empty F returns the
// identity bundle with bound 1.
ConstructionBundle build_theorem_map(const ZSpec& spec);

// Point pipeline: normalize F in A^n, build sigma, shift every coordinate by
// its interpolation polynomial, undo the normalizer. Requires m = 0 and
// l >= 1. Collinear F tightens the bound to exactly l+2.
ConstructionBundle build_sigma(const ZSpec& spec);

// The superexponential-complement construction: q_i(z_{i+2}) = prod_{j=1}^{d-i-1}
// (z_{i+2} - j), r = prod_{j=1}^{d-2}(z1 - j). Requires d >= n > 2. The bundle
// has degree exactly d and carries the enumerated complement,
// (d-2)*(d-2)!/(d-n)! points.
ConstructionBundle build_many_points_example(int n, int d);

// Exact: rank of the difference vectors is <= 1.
bool points_collinear(const std::vector<std::vector<Rational>>& points);

}  // namespace asurj
