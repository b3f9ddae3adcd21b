#include "asurj/triangular.hpp"

#include <stdexcept>

namespace asurj {

const char* auto_kind_name(AutoKind k) {
  switch (k) {
    case AutoKind::Affine2d: return "affine-2d";
    case AutoKind::ShearNd: return "shear-nd";
    case AutoKind::LagrangeShift: return "lagrange-shift";
  }
  return "?";
}

namespace {

void check_roundtrip(const TriangularAuto& a) {
  const PolyMap id = PolyMap::identity(a.forward.num_vars());
  if (compose(a.forward, a.inverse) != id || compose(a.inverse, a.forward) != id)
    throw std::logic_error("TriangularAuto: forward/inverse round-trip is not the identity");
}

TriangularAuto finish(AutoKind kind, PolyMap forward, PolyMap inverse) {
  TriangularAuto a{kind, std::move(forward), std::move(inverse)};
  check_roundtrip(a);
  return a;
}

bool is_identity_component(const MultiPoly& p, int index) {
  return p == MultiPoly::variable(p.num_vars(), index);
}

}  // namespace

TriangularAuto make_affine2d(int n, const Rational& a, const Rational& b,
                             const Rational& c, const Rational& d,
                             const Rational& e, const Rational& f) {
  if (n < 2) throw std::invalid_argument("make_affine2d: n must be at least 2");
  const Rational det = a * d - b * c;
  if (det == 0) throw std::invalid_argument("make_affine2d: non-invertible affine part");
  const MultiPoly z1 = MultiPoly::variable(n, 1);
  const MultiPoly z2 = MultiPoly::variable(n, 2);
  auto lin = [&](const Rational& x, const Rational& y, const Rational& t) {
    return x * z1 + y * z2 + MultiPoly::constant(n, t);
  };
  std::vector<MultiPoly> fwd{lin(a, b, e), lin(c, d, f)};
  // inverse = M^{-1} (z - translate)
  const Rational ai = d / det, bi = -b / det, ci = -c / det, di = a / det;
  std::vector<MultiPoly> inv{lin(ai, bi, -(ai * e + bi * f)),
                             lin(ci, di, -(ci * e + di * f))};
  for (int i = 3; i <= n; ++i) {
    fwd.push_back(MultiPoly::variable(n, i));
    inv.push_back(MultiPoly::variable(n, i));
  }
  return finish(AutoKind::Affine2d, PolyMap(std::move(fwd)), PolyMap(std::move(inv)));
}

TriangularAuto make_shear(int n, std::span<const Rational> coeffs) {
  if (n < 2) throw std::invalid_argument("make_shear: n must be at least 2");
  if (static_cast<int>(coeffs.size()) != n - 1)
    throw std::invalid_argument("make_shear: expected one coefficient per variable z2..zn");
  MultiPoly shift(n);
  for (int k = 2; k <= n; ++k) shift += coeffs[k - 2] * MultiPoly::variable(n, k);
  std::vector<MultiPoly> fwd{MultiPoly::variable(n, 1) + shift};
  std::vector<MultiPoly> inv{MultiPoly::variable(n, 1) - shift};
  for (int i = 2; i <= n; ++i) {
    fwd.push_back(MultiPoly::variable(n, i));
    inv.push_back(MultiPoly::variable(n, i));
  }
  return finish(AutoKind::ShearNd, PolyMap(std::move(fwd)), PolyMap(std::move(inv)));
}

TriangularAuto make_lagrange_shift(int n, std::span<const MultiPoly> shifts) {
  if (n < 2) throw std::invalid_argument("make_lagrange_shift: n must be at least 2");
  if (static_cast<int>(shifts.size()) != n - 1)
    throw std::invalid_argument("make_lagrange_shift: expected one shift per variable z2..zn");
  const MultiPoly z1 = MultiPoly::variable(n, 1);
  std::vector<MultiPoly> fwd{z1};
  std::vector<MultiPoly> inv{z1};
  for (int i = 2; i <= n; ++i) {
    const MultiPoly& L = shifts[i - 2];
    if (L.num_vars() != 1)
      throw std::invalid_argument("make_lagrange_shift: shifts must be 1-variable polynomials");
    const MultiPoly Ln = L.substitute(std::span<const MultiPoly>(&z1, 1));
    fwd.push_back(MultiPoly::variable(n, i) + Ln);
    inv.push_back(MultiPoly::variable(n, i) - Ln);
  }
  return finish(AutoKind::LagrangeShift, PolyMap(std::move(fwd)), PolyMap(std::move(inv)));
}

TriangularAuto invert_triangular(const PolyMap& forward, AutoKind kind) {
  const int n = forward.num_vars();
  switch (kind) {
    case AutoKind::Affine2d: {
      if (n < 2) throw std::invalid_argument("invert_triangular: affine-2d needs n >= 2");
      for (int i = 3; i <= n; ++i)
        if (!is_identity_component(forward.component(i), i))
          throw std::invalid_argument("invert_triangular: affine-2d must be identity beyond z2");
      Rational coef[2][3];  // [component][z1, z2, const]
      for (int ci = 0; ci < 2; ++ci) {
        const MultiPoly& p = forward.component(ci + 1);
        Exponents e1(n, 0), e2(n, 0);
        e1[0] = 1;
        e2[1] = 1;
        coef[ci][0] = p.coeff(e1);
        coef[ci][1] = p.coeff(e2);
        coef[ci][2] = p.constant_term();
        const MultiPoly residue =
            p - coef[ci][0] * MultiPoly::variable(n, 1) - coef[ci][1] * MultiPoly::variable(n, 2) -
            MultiPoly::constant(n, coef[ci][2]);
        if (!residue.is_zero())
          throw std::invalid_argument("invert_triangular: component is not affine in z1,z2");
      }
      return make_affine2d(n, coef[0][0], coef[0][1], coef[1][0], coef[1][1], coef[0][2],
                           coef[1][2]);
    }
    case AutoKind::ShearNd: {
      for (int i = 2; i <= n; ++i)
        if (!is_identity_component(forward.component(i), i))
          throw std::invalid_argument("invert_triangular: shear must be identity beyond z1");
      const MultiPoly shift = forward.component(1) - MultiPoly::variable(n, 1);
      if (shift.degree_in(1) != 0 || (shift.total_degree().value_or(0) > 1) ||
          shift.constant_term() != 0)
        throw std::invalid_argument("invert_triangular: first component is not z1 + sum c_k z_k");
      std::vector<Rational> coeffs;
      for (int k = 2; k <= n; ++k) {
        Exponents e(n, 0);
        e[k - 1] = 1;
        coeffs.push_back(shift.coeff(e));
      }
      return make_shear(n, coeffs);
    }
    case AutoKind::LagrangeShift: {
      if (!is_identity_component(forward.component(1), 1))
        throw std::invalid_argument("invert_triangular: lagrange-shift must fix z1");
      std::vector<MultiPoly> shifts;
      for (int i = 2; i <= n; ++i) {
        const MultiPoly s = forward.component(i) - MultiPoly::variable(n, i);
        if (!s.is_univariate_in(1))
          throw std::invalid_argument("invert_triangular: shift of z" + std::to_string(i) +
                                      " must depend on z1 only");
        MultiPoly L(1);
        for (const auto& [e, c] : s.terms()) L.add_term(Exponents{e[0]}, c);
        shifts.push_back(std::move(L));
      }
      return make_lagrange_shift(n, shifts);
    }
  }
  throw std::invalid_argument("invert_triangular: unsupported shape");
}

TriangularAuto inverted(TriangularAuto a) {
  std::swap(a.forward, a.inverse);
  return a;
}

TriangularAuto extend_identity(const TriangularAuto& a, int n) {
  const int k = a.forward.num_vars();
  if (n == k) return a;
  if (n < k) throw std::invalid_argument("extend_identity: cannot shrink an automorphism");
  auto extend = [&](const PolyMap& f) {
    std::vector<MultiPoly> comps;
    for (const MultiPoly& c : f.components()) comps.push_back(embedded(c, n));
    for (int i = k + 1; i <= n; ++i) comps.push_back(MultiPoly::variable(n, i));
    return PolyMap(std::move(comps));
  };
  return finish(a.kind, extend(a.forward), extend(a.inverse));
}

}  // namespace asurj
