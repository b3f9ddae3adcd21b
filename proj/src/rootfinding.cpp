#include "asurj/rootfinding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "asurj/errors.hpp"

namespace asurj {

UniPolyC::UniPolyC(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
  for (const Complex& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw NonFiniteError("UniPolyC: non-finite coefficient");
}

Complex UniPolyC::eval(Complex z) const {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UniPolyC UniPolyC::derivative() const {
  if (coeffs_.size() <= 1) return UniPolyC{};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return UniPolyC(std::move(d));
}

double UniPolyC::coefficient_scale() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

PolishResult polish_root(const UniPolyC& p, Complex seed, double tol, int max_iter) {
  if (p.degree() < 1) throw std::invalid_argument("polish_root: degree must be >= 1");
  const UniPolyC dp = p.derivative();
  const double target = tol * p.coefficient_scale();
  PolishResult res{seed, false, false};
  Complex x = seed;
  double best = std::abs(p.eval(x));
  res.root = x;
  for (int it = 0; it < max_iter; ++it) {
    const Complex px = p.eval(x);
    const double apx = std::abs(px);
    if (apx < best) {
      best = apx;
      res.root = x;
    }
    if (apx <= target) {
      res.converged = true;
      return res;
    }
    const Complex dpx = dp.eval(x);
    if (dpx == Complex(0.0, 0.0)) {
      res.derivative_stalled = true;
      return res;
    }
    x -= px / dpx;
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return res;
  }
  res.converged = best <= target;
  return res;
}

namespace {

// Aberth-Ehrlich sweep plus tight Newton polishing, shared by the certifying
// and best-effort entry points. The polish target is always near machine
// level so well-separated roots come back as accurate as doubles allow, no
// matter how loose the sweep target was.
RootSet iterate_roots(const UniPolyC& p, double sweep_target, int max_iter) {
  // exact zero roots split off first; they are exact and the deflated
  // polynomial conditions the iteration better
  size_t zero_roots = 0;
  while (zero_roots < p.coeffs().size() && p.coeffs()[zero_roots] == Complex(0.0, 0.0))
    ++zero_roots;
  std::vector<Complex> work(p.coeffs().begin() + zero_roots, p.coeffs().end());
  const UniPolyC q(std::move(work));
  const int d = q.degree();

  std::vector<Complex> roots;
  roots.reserve(p.degree());

  if (d >= 1) {
    const UniPolyC dq = q.derivative();
    const Complex lead = q.coeffs().back();
    double radius = 0.0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(q.coeffs()[i] / lead));
    radius += 1.0;  // Cauchy bound

    std::vector<Complex> z(d);
    for (int i = 0; i < d; ++i) {
      const double angle =
          2.0 * std::numbers::pi * i / d + std::numbers::pi / (2.0 * d);
      z[i] = radius * Complex(std::cos(angle), std::sin(angle));
    }

    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
      for (int i = 0; i < d; ++i) {
        const Complex pi = q.eval(z[i]);
        if (std::abs(pi) <= 0.01 * sweep_target) continue;
        Complex dpi = dq.eval(z[i]);
        if (dpi == Complex(0.0, 0.0)) {
          z[i] += Complex(1e-6 * (1.0 + std::abs(z[i])), 1e-6);
          continue;
        }
        const Complex w = pi / dpi;
        Complex s(0.0, 0.0);
        for (int j = 0; j < d; ++j) {
          if (j == i) continue;
          Complex diff = z[i] - z[j];
          if (diff == Complex(0.0, 0.0)) diff = Complex(1e-12, 1e-12);
          s += 1.0 / diff;
        }
        const Complex denom = 1.0 - w * s;
        z[i] -= (std::abs(denom) < 1e-280) ? w : w / denom;
      }
      converged = true;
      for (int i = 0; i < d; ++i)
        if (std::abs(q.eval(z[i])) > sweep_target) {
          converged = false;
          break;
        }
    }

    for (int i = 0; i < d; ++i) {
      const PolishResult pr = polish_root(p, z[i], 1e-15, 40);
      roots.push_back(std::abs(p.eval(pr.root)) <= std::abs(p.eval(z[i])) ? pr.root : z[i]);
    }
  }
  for (size_t i = 0; i < zero_roots; ++i) roots.push_back(Complex(0.0, 0.0));

  double max_residual = 0.0;
  for (const Complex& r : roots) max_residual = std::max(max_residual, std::abs(p.eval(r)));
  return RootSet{std::move(roots), max_residual};
}

}  // namespace

RootSet find_all_roots(const UniPolyC& p, double tol, int max_iter) {
  if (p.degree() < 1)
    throw std::invalid_argument("find_all_roots: degree must be >= 1 (zero or constant rejected)");
  if (tol <= 0.0 || max_iter < 1)
    throw std::invalid_argument("find_all_roots: tol and max_iter must be positive");
  const double target = tol * p.coefficient_scale();
  RootSet rs = iterate_roots(p, target, max_iter);
  if (rs.max_residual > target) {
    std::ostringstream os;
    os << "find_all_roots: no convergence within " << max_iter
       << " iterations (max residual " << rs.max_residual << ", target " << target << ")";
    throw RootFindingError(os.str());
  }
  return rs;
}

RootSet find_roots_best_effort(const UniPolyC& p, int max_iter) {
  if (p.degree() < 1)
    throw std::invalid_argument("find_roots_best_effort: degree must be >= 1");
  return iterate_roots(p, 1e-13 * p.coefficient_scale(), max_iter);
}

std::vector<Complex> dedupe_roots(const std::vector<Complex>& roots, double spacing) {
  std::vector<Complex> out;
  for (const Complex& r : roots) {
    bool seen = false;
    for (const Complex& kept : out)
      if (std::abs(r - kept) <= spacing) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(r);
  }
  return out;
}

}  // namespace asurj
