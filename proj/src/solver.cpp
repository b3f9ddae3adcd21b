#include "asurj/solver.hpp"

#include "asurj/errors.hpp"
#include <cmath>
#include <stdexcept>

namespace asurj {

const char* verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Empty: return "empty";
    case VerdictKind::AllZ2: return "all-z2";
    case VerdictKind::Finite: return "finite";
  }
  return "?";
}

namespace {

constexpr double kBranchSpacing = 1e-7;
constexpr double kNumericTrim = 1e-12;

void check_dim(const ConstructionBundle& b, size_t got) {
  if (static_cast<int>(got) != b.n)
    throw std::invalid_argument("solver: target dimension does not match the bundle");
}

bool is_g_family(Family f) {
  return f == Family::LemmaG || f == Family::TheoremF || f == Family::ExampleManyPoints;
}

void require_g_family(const ConstructionBundle& b) {
  if (!is_g_family(b.family))
    throw std::invalid_argument("solver: bundle family does not support the g-reduction");
}

void require_sigma_family(const ConstructionBundle& b) {
  if (b.family != Family::PropSigma)
    throw std::invalid_argument("solver: bundle family is not prop-sigma");
}

// ---- exact layer -----------------------------------------------------------

// A(z2) = w1 - w2 z2 - sum alpha_i z2^{i+1}, as a 1-variable polynomial
MultiPoly inner_poly_exact(const Rational& w1, const Rational& w2,
                           std::span<const Rational> alphas) {
  const MultiPoly z2 = MultiPoly::variable(1, 1);
  MultiPoly a = MultiPoly::constant(1, w1) - w2 * z2;
  for (size_t i = 0; i < alphas.size(); ++i)
    a -= alphas[i] * z2.pow(static_cast<int>(i) + 2);
  return a;
}

// rho(z2) = (1 - w2) + z2 * r(A(z2))
MultiPoly residual_exact(const MultiPoly& r, const Rational& w1, const Rational& w2,
                         std::span<const Rational> alphas) {
  const MultiPoly z2 = MultiPoly::variable(1, 1);
  const MultiPoly a = inner_poly_exact(w1, w2, alphas);
  return MultiPoly::constant(1, 1 - w2) + z2 * r.substitute(std::span<const MultiPoly>(&a, 1));
}

SolvabilityVerdict classify_residual_exact(MultiPoly rho) {
  SolvabilityVerdict v;
  v.exact = true;
  if (rho.is_zero()) {
    v.kind = VerdictKind::AllZ2;
  } else if (rho.total_degree() == 0) {
    v.kind = VerdictKind::Empty;
    v.empty_constant = rho.constant_term();
  } else {
    v.kind = VerdictKind::Finite;
  }
  v.residual = std::move(rho);
  return v;
}

// ---- numeric layer ---------------------------------------------------------

std::vector<Complex> poly_mul_c(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// dense complex coefficients of (1 - w2) + z2 * r(w1 - w2 z2 - sum alpha_i z2^{i+1})
std::vector<Complex> residual_numeric(const MultiPoly& r, Complex w1, Complex w2,
                                      std::span<const Complex> alphas) {
  std::vector<Complex> inner(2 + alphas.size(), Complex(0.0, 0.0));
  inner[0] = w1;
  inner[1] = -w2;
  for (size_t i = 0; i < alphas.size(); ++i) inner[i + 2] = -alphas[i];
  while (inner.size() > 1 && inner.back() == Complex(0.0, 0.0)) inner.pop_back();

  const std::vector<Rational> rc = r.univariate_coeffs(1);
  std::vector<Complex> acc{to_complex(rc.back())};  // Horner over polynomials
  for (size_t k = rc.size() - 1; k-- > 0;) {
    acc = poly_mul_c(acc, inner);
    acc[0] += to_complex(rc[k]);
  }
  std::vector<Complex> rho(acc.size() + 1, Complex(0.0, 0.0));
  rho[0] = Complex(1.0, 0.0) - w2;
  for (size_t k = 0; k < acc.size(); ++k) rho[k + 1] += acc[k];
  return rho;
}

// trims numerically negligible leading coefficients before classifying
SolvabilityVerdict classify_residual_numeric(std::vector<Complex> coeffs) {
  double scale = 0.0;
  for (const Complex& c : coeffs) scale = std::max(scale, std::abs(c));
  size_t eff = coeffs.size();
  while (eff > 0 && std::abs(coeffs[eff - 1]) <= kNumericTrim * scale) --eff;
  coeffs.resize(eff);
  SolvabilityVerdict v;
  v.exact = false;
  if (eff == 0) {
    v.kind = VerdictKind::AllZ2;
  } else if (eff == 1) {
    v.kind = VerdictKind::Empty;
  } else {
    v.kind = VerdictKind::Finite;
  }
  v.residual = UniPolyC(std::move(coeffs));
  return v;
}

UniPolyC to_unipoly(const MultiPoly& p) {
  std::vector<Complex> coeffs;
  for (const Rational& c : p.univariate_coeffs(1)) coeffs.push_back(to_complex(c));
  return UniPolyC(std::move(coeffs));
}

template <typename Scalar>
std::vector<Complex> to_complex_point(std::span<const Scalar> w) {
  std::vector<Complex> out;
  out.reserve(w.size());
  for (const Scalar& x : w) {
    if constexpr (std::is_same_v<Scalar, Rational>)
      out.push_back(to_complex(x));
    else
      out.push_back(x);
  }
  return out;
}

// forward check |full_map(z) - w|_inf; pushes the witness only if it verifies
template <typename Scalar>
void verify_and_collect(const ConstructionBundle& b, std::span<const Scalar> w,
                        std::vector<Complex> z, double tol, PreimageSet& out) {
  const std::vector<Complex> fz = b.full_map.eval(std::span<const Complex>(z));
  double res = 0.0;
  for (size_t i = 0; i < fz.size(); ++i) {
    const Complex wi = [&] {
      if constexpr (std::is_same_v<Scalar, Rational>)
        return to_complex(w[i]);
      else
        return w[i];
    }();
    res = std::max(res, std::abs(fz[i] - wi));
  }
  if (res <= tol) {
    out.witnesses.push_back(std::move(z));
    out.residuals.push_back(res);
  }
}

// z2 roots of a residual -> witnesses (A(z2), z2, tail...) for the g-shape.
// Residuals can carry root clusters whose attainable |rho(root)| in doubles
// exceeds any certificate target, so the solve is best-effort: the forward
// check below is the actual gate and discards coarsely located roots, while
// well-separated roots still arrive at machine accuracy.
template <typename Scalar>
void collect_g_witnesses(const ConstructionBundle& b, std::span<const Scalar> w,
                         const UniPolyC& rho, Complex w1, Complex w2,
                         std::span<const Complex> alphas, std::span<const Complex> tail,
                         double tol, PreimageSet& out) {
  const RootSet roots = find_roots_best_effort(rho);
  for (const Complex& z2 : roots.roots) {
    Complex z1 = w1 - w2 * z2;
    Complex zp = z2 * z2;
    for (const Complex& a : alphas) {
      z1 -= a * zp;
      zp *= z2;
    }
    std::vector<Complex> z{z1, z2};
    z.insert(z.end(), tail.begin(), tail.end());
    verify_and_collect(b, w, std::move(z), tol, out);
  }
}

// identity bundles (l = 0): the preimage of w is exactly {w}
bool is_identity_bundle(const ConstructionBundle& b) { return b.betas.empty(); }

template <typename Scalar>
SolvabilityVerdict identity_verdict(std::span<const Scalar> w) {
  // the second component of the identity map reads z2 = w2
  SolvabilityVerdict v;
  v.kind = VerdictKind::Finite;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    v.exact = true;
    v.residual = MultiPoly::variable(1, 1) - MultiPoly::constant(1, w[1]);
  } else {
    v.exact = false;
    v.residual = UniPolyC(std::vector<Complex>{-w[1], Complex(1.0, 0.0)});
  }
  return v;
}

// ---- sigma towers ----------------------------------------------------------

// all sign branches of z_n = ±sqrt(w_n), z_k = ±sqrt(w_k - z_{k+1}), k = n-1..3,
// deduplicated at kBranchSpacing; each entry is the tail (z3..zn)
std::vector<std::vector<Complex>> sigma_tail_branches(std::span<const Complex> w_core) {
  const int n = static_cast<int>(w_core.size());
  const int vars = n - 2;
  std::vector<std::vector<Complex>> branches;
  const size_t total = size_t{1} << vars;
  for (size_t mask = 0; mask < total; ++mask) {
    std::vector<Complex> tail(vars);
    // bit 0 flips z_n, bit (vars-1) flips z_3
    Complex below = std::sqrt(w_core[n - 1]);
    if (mask & 1) below = -below;
    tail[vars - 1] = below;
    for (int k = n - 1; k >= 3; --k) {
      Complex v = std::sqrt(w_core[k - 1] - below);
      if (mask & (size_t{1} << (n - k))) v = -v;
      below = v;
      tail[k - 3] = v;
    }
    bool dup = false;
    for (const auto& kept : branches) {
      double dist = 0.0;
      for (int i = 0; i < vars; ++i) dist = std::max(dist, std::abs(kept[i] - tail[i]));
      if (dist <= kBranchSpacing) {
        dup = true;
        break;
      }
    }
    if (!dup) branches.push_back(std::move(tail));
  }
  return branches;
}

}  // namespace

std::vector<Rational> pull_back_target(const ConstructionBundle& b,
                                       std::span<const Rational> w) {
  check_dim(b, w.size());
  std::vector<Rational> out(w.begin(), w.end());
  for (auto it = b.post_autos.rbegin(); it != b.post_autos.rend(); ++it)
    out = it->inverse.eval(out);
  return out;
}

std::vector<Complex> pull_back_target(const ConstructionBundle& b,
                                      std::span<const Complex> w) {
  check_dim(b, w.size());
  std::vector<Complex> out(w.begin(), w.end());
  for (auto it = b.post_autos.rbegin(); it != b.post_autos.rend(); ++it)
    out = it->inverse.eval(out);
  return out;
}

SolvabilityVerdict residual_poly_g(const ConstructionBundle& b, std::span<const Rational> w) {
  require_g_family(b);
  check_dim(b, w.size());
  if (is_identity_bundle(b)) return identity_verdict(w);
  const std::vector<Rational> wc = pull_back_target(b, w);
  std::vector<Rational> alphas;
  alphas.reserve(b.z_normalized.w_polys.size());
  for (const MultiPoly& q : b.z_normalized.w_polys) alphas.push_back(q.eval(wc));
  return classify_residual_exact(residual_exact(b.r_poly, wc[0], wc[1], alphas));
}

SolvabilityVerdict residual_poly_g(const ConstructionBundle& b, std::span<const Complex> w) {
  require_g_family(b);
  check_dim(b, w.size());
  if (is_identity_bundle(b)) return identity_verdict(w);
  const std::vector<Complex> wc = pull_back_target(b, w);
  std::vector<Complex> alphas;
  alphas.reserve(b.z_normalized.w_polys.size());
  for (const MultiPoly& q : b.z_normalized.w_polys) alphas.push_back(q.eval(wc));
  return classify_residual_numeric(residual_numeric(b.r_poly, wc[0], wc[1], alphas));
}

namespace {

template <typename Scalar>
PreimageSet preimage_g_impl(const ConstructionBundle& b, std::span<const Scalar> w, double tol) {
  PreimageSet out;
  if (is_identity_bundle(b)) {
    verify_and_collect(b, w, to_complex_point(w), tol, out);
    return out;
  }
  const SolvabilityVerdict v = residual_poly_g(b, w);
  if (v.kind == VerdictKind::Empty) {
    out.exact_empty = v.exact;
    return out;
  }

  // pulled-back data, numerically
  std::vector<Complex> wc;
  std::vector<Complex> alphas;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    const std::vector<Rational> wcq = pull_back_target(b, w);
    wc = to_complex_point(std::span<const Rational>(wcq));
  } else {
    wc = pull_back_target(b, w);
  }
  for (const MultiPoly& q : b.z_normalized.w_polys) alphas.push_back(q.eval(std::span<const Complex>(wc)));
  const std::span<const Complex> tail(wc.data() + 2, wc.size() - 2);

  if (v.kind == VerdictKind::AllZ2) {
    // any z2 works; take the canonical witness z2 = 0
    std::vector<Complex> z{wc[0], Complex(0.0, 0.0)};
    z.insert(z.end(), tail.begin(), tail.end());
    verify_and_collect(b, w, std::move(z), tol, out);
    return out;
  }

  const UniPolyC rho = std::holds_alternative<MultiPoly>(v.residual)
                           ? to_unipoly(std::get<MultiPoly>(v.residual))
                           : std::get<UniPolyC>(v.residual);
  collect_g_witnesses(b, w, rho, wc[0], wc[1], alphas, tail, tol, out);
  return out;
}

template <typename Scalar>
PreimageSet preimage_sigma_impl(const ConstructionBundle& b, std::span<const Scalar> w,
                                double tol) {
  require_sigma_family(b);
  check_dim(b, w.size());
  PreimageSet out;
  const int n = b.n;

  if constexpr (std::is_same_v<Scalar, Rational>) {
    const std::vector<Rational> wc = pull_back_target(b, w);
    bool tails_zero = true;
    for (int k = 3; k <= n; ++k)
      if (wc[k - 1] != 0) {
        tails_zero = false;
        break;
      }
    if (tails_zero) {
      // unique branch z3 = ... = zn = 0: the equation is exact
      const SolvabilityVerdict v =
          classify_residual_exact(residual_exact(b.r_poly, wc[0], wc[1], {}));
      if (v.kind == VerdictKind::Empty) {
        out.exact_empty = true;
        return out;
      }
      const std::vector<Complex> tail(n - 2, Complex(0.0, 0.0));
      const Complex w1 = to_complex(wc[0]), w2 = to_complex(wc[1]);
      if (v.kind == VerdictKind::AllZ2) {
        std::vector<Complex> z{w1, Complex(0.0, 0.0)};
        z.insert(z.end(), tail.begin(), tail.end());
        verify_and_collect(b, w, std::move(z), tol, out);
        return out;
      }
      collect_g_witnesses(b, w, to_unipoly(std::get<MultiPoly>(v.residual)), w1, w2, {},
                          tail, tol, out);
      return out;
    }
    // nonzero tail: the square-root tower has at least two distinct branch
    // values, so some branch is solvable — enumerate numerically
    const std::vector<Complex> wcc = to_complex_point(std::span<const Rational>(wc));
    for (const std::vector<Complex>& tail : sigma_tail_branches(wcc)) {
      const Complex w2_eff = wcc[1] - tail[0];
      const SolvabilityVerdict bv =
          classify_residual_numeric(residual_numeric(b.r_poly, wcc[0], w2_eff, {}));
      if (bv.kind != VerdictKind::Finite) continue;
      collect_g_witnesses(b, w, std::get<UniPolyC>(bv.residual), wcc[0], w2_eff, {}, tail,
                          tol, out);
    }
    return out;
  } else {
    const std::vector<Complex> wc = pull_back_target(b, w);
    if (n == 2) {
      const SolvabilityVerdict v =
          classify_residual_numeric(residual_numeric(b.r_poly, wc[0], wc[1], {}));
      if (v.kind != VerdictKind::Finite) return out;
      collect_g_witnesses(b, w, std::get<UniPolyC>(v.residual), wc[0], wc[1], {}, {}, tol, out);
      return out;
    }
    for (const std::vector<Complex>& tail : sigma_tail_branches(wc)) {
      const Complex w2_eff = wc[1] - tail[0];
      const SolvabilityVerdict bv =
          classify_residual_numeric(residual_numeric(b.r_poly, wc[0], w2_eff, {}));
      if (bv.kind != VerdictKind::Finite) continue;
      collect_g_witnesses(b, w, std::get<UniPolyC>(bv.residual), wc[0], w2_eff, {}, tail, tol,
                          out);
    }
    return out;
  }
}

}  // namespace

PreimageSet preimage_g(const ConstructionBundle& b, std::span<const Rational> w, double tol) {
  require_g_family(b);
  check_dim(b, w.size());
  return preimage_g_impl(b, w, tol);
}

PreimageSet preimage_g(const ConstructionBundle& b, std::span<const Complex> w, double tol) {
  require_g_family(b);
  check_dim(b, w.size());
  return preimage_g_impl(b, w, tol);
}

PreimageSet preimage_sigma(const ConstructionBundle& b, std::span<const Rational> w, double tol) {
  // n = 2 falls out of the same path: no tail variables, exact residual
  return preimage_sigma_impl(b, w, tol);
}

PreimageSet preimage_sigma(const ConstructionBundle& b, std::span<const Complex> w, double tol) {
  return preimage_sigma_impl(b, w, tol);
}

PreimageSet preimage(const ConstructionBundle& b, std::span<const Rational> w, double tol) {
  return b.family == Family::PropSigma ? preimage_sigma(b, w, tol) : preimage_g(b, w, tol);
}

PreimageSet preimage(const ConstructionBundle& b, std::span<const Complex> w, double tol) {
  return b.family == Family::PropSigma ? preimage_sigma(b, w, tol) : preimage_g(b, w, tol);
}

bool membership_in_Z(const ConstructionBundle& b, std::span<const Rational> w) {
  check_dim(b, w.size());
  if (is_identity_bundle(b)) return false;
  const std::vector<Rational> wc = pull_back_target(b, w);
  bool beta_hit = false;
  for (const Rational& beta : b.betas)
    if (wc[0] == beta) {
      beta_hit = true;
      break;
    }
  if (!beta_hit) return false;
  if (b.family == Family::PropSigma) {
    for (int k = 2; k <= b.n; ++k)
      if (wc[k - 1] != 0) return false;
    return true;
  }
  if (wc[1] != 0) return false;
  for (const MultiPoly& q : b.z_normalized.w_polys)
    if (q.eval(std::span<const Rational>(wc)) != 0) return false;
  return true;
}

SolvabilityVerdict classify_exact(const ConstructionBundle& b, std::span<const Rational> w) {
  check_dim(b, w.size());
  if (b.family != Family::PropSigma) return residual_poly_g(b, w);

  const std::vector<Rational> wc = pull_back_target(b, w);
  bool tails_zero = true;
  for (int k = 3; k <= b.n; ++k)
    if (wc[k - 1] != 0) {
      tails_zero = false;
      break;
    }
  if (b.n == 2 || tails_zero)
    return classify_residual_exact(residual_exact(b.r_poly, wc[0], wc[1], {}));

  // nonzero tail: provably solvable (the tower takes at least two distinct z3
  // values, at most one of which can block the z2 equation). The decision is
  // exact; the stored residual is the numeric one of a solvable branch.
  const std::vector<Complex> wcc = to_complex_point(std::span<const Rational>(wc));
  const auto branches = sigma_tail_branches(wcc);
  SolvabilityVerdict v;
  v.kind = VerdictKind::Finite;
  v.exact = true;
  const Complex w2c = wcc[1];
  for (const auto& tail : branches) {
    if (std::abs(tail[0] - w2c) > 1e-12 * (1.0 + std::abs(w2c))) {
      v.residual = UniPolyC(residual_numeric(b.r_poly, wcc[0], w2c - tail[0], {}));
      return v;
    }
  }
  v.residual = UniPolyC(residual_numeric(b.r_poly, wcc[0], w2c - branches.front()[0], {}));
  return v;
}

}  // namespace asurj
