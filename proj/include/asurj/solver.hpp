#pragma once

#include <optional>
#include <variant>

#include "asurj/construct.hpp"
#include "asurj/rootfinding.hpp"

namespace asurj {

enum class VerdictKind { Empty, AllZ2, Finite };
const char* verdict_kind_name(VerdictKind k);

// Classification of the univariate equation a preimage reduces to.
// `exact` marks decisions made entirely in rational arithmetic: Empty with
// exact=true is a machine-checked certificate that the target has no
// preimage (the residual is the nonzero constant in empty_constant).
struct SolvabilityVerdict {
  VerdictKind kind = VerdictKind::Finite;
  bool exact = false;
  std::variant<MultiPoly, UniPolyC> residual = UniPolyC{};  // univariate; exact for rational targets
  std::optional<Rational> empty_constant;                   // set when kind == Empty and exact
};

struct PreimageSet {
  std::vector<std::vector<Complex>> witnesses;  // points of A^n, forward-verified
  std::vector<double> residuals;                // per-witness |f(z) - w|_inf
  bool exact_empty = false;                     // set only by exact classification
};

// Target pulled back through the bundle's post-automorphisms, so solving
// core_map(z) = result is equivalent to full_map(z) = w.
std::vector<Rational> pull_back_target(const ConstructionBundle& b,
                                       std::span<const Rational> w);
std::vector<Complex> pull_back_target(const ConstructionBundle& b,
                                      std::span<const Complex> w);

// The g-reduction residual in z2: (1 - w2) + z2 * r(w1 - w2 z2 - sum a_i z2^{i+1})
// after pulling w back and specializing a_i = q_i(w3..wn). Exact overload for
// rational targets, numeric for complex ones.
SolvabilityVerdict residual_poly_g(const ConstructionBundle& b, std::span<const Rational> w);
SolvabilityVerdict residual_poly_g(const ConstructionBundle& b, std::span<const Complex> w);

// Full preimage of w under the bundle's map. Every returned witness passes
// the forward check |full_map(z) - w|_inf <= tol; exact_empty is set only by
// rational-arithmetic classification.
PreimageSet preimage_g(const ConstructionBundle& b, std::span<const Rational> w, double tol = 1e-8);
PreimageSet preimage_g(const ConstructionBundle& b, std::span<const Complex> w, double tol = 1e-8);

// sigma preimages: the nested square-root back-solve for z3..zn (2^(n-2) sign
// branches, deduplicated at 1e-7 spacing), then the z2 equation per branch.
PreimageSet preimage_sigma(const ConstructionBundle& b, std::span<const Rational> w, double tol = 1e-8);
PreimageSet preimage_sigma(const ConstructionBundle& b, std::span<const Complex> w, double tol = 1e-8);

// Family dispatch.
PreimageSet preimage(const ConstructionBundle& b, std::span<const Rational> w, double tol = 1e-8);
PreimageSet preimage(const ConstructionBundle& b, std::span<const Complex> w, double tol = 1e-8);

// Exact membership of w in the avoided set Z, in the caller's original
// coordinates (w is pulled through the recorded normalizers internally).
bool membership_in_Z(const ConstructionBundle& b, std::span<const Rational> w);

// Exact Empty/Finite decision at a rational target for any family. For the
// sigma family with nonzero tail coordinates the decision is exact (the
// square-root tower forces a solvable branch) while the informational
// residual is the numeric one of a solvable branch.
SolvabilityVerdict classify_exact(const ConstructionBundle& b, std::span<const Rational> w);

}  // namespace asurj
