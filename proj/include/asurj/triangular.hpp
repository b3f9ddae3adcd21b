#pragma once

#include <span>

#include "asurj/polymap.hpp"

namespace asurj {

enum class AutoKind { Affine2d, ShearNd, LagrangeShift };
const char* auto_kind_name(AutoKind k);

// Invertible polynomial automorphism carried with its explicit inverse.
// Every constructor checks forward ∘ inverse = inverse ∘ forward = identity
// symbolically, term by term.
struct TriangularAuto {
  AutoKind kind;
  PolyMap forward;
  PolyMap inverse;
};

// Recognizes the supported shapes and builds the exact inverse:
//   affine-2d:      invertible affine map in z1,z2, identity elsewhere
//   shear-nd:       z1 + sum_{k>=2} c_k z_k, identity elsewhere
//   lagrange-shift: (z1, z2 + L2(z1), ..., zn + Ln(z1))
// Throws std::invalid_argument for anything else (including a singular
// affine part).
TriangularAuto invert_triangular(const PolyMap& forward, AutoKind kind);

TriangularAuto make_affine2d(int n, const Rational& a, const Rational& b,
                             const Rational& c, const Rational& d,
                             const Rational& e, const Rational& f);
// coeffs[k] multiplies z_{k+2}; size n-1.
TriangularAuto make_shear(int n, std::span<const Rational> coeffs);
// shifts[i] is L_{i+2}(z1) as a 1-variable polynomial; size n-1.
TriangularAuto make_lagrange_shift(int n, std::span<const MultiPoly> shifts);

TriangularAuto inverted(TriangularAuto a);                 // swap forward/inverse
TriangularAuto extend_identity(const TriangularAuto& a, int n);  // pad to A^n

}  // namespace asurj
