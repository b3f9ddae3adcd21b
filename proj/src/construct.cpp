#include "asurj/construct.hpp"

#include <sstream>
#include <stdexcept>

#include "asurj/interpolate.hpp"

namespace asurj {

const char* family_name(Family f) {
  switch (f) {
    case Family::LemmaG: return "lemma-g";
    case Family::TheoremF: return "theorem-f";
    case Family::PropSigma: return "prop-sigma";
    case Family::ExampleManyPoints: return "example-many-points";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "lemma-g") return Family::LemmaG;
  if (name == "theorem-f") return Family::TheoremF;
  if (name == "prop-sigma") return Family::PropSigma;
  if (name == "example-many-points") return Family::ExampleManyPoints;
  throw std::invalid_argument("unknown bundle family: '" + name + "'");
}

MultiPoly build_r(std::span<const Rational> betas) {
  for (size_t i = 0; i < betas.size(); ++i)
    for (size_t j = i + 1; j < betas.size(); ++j)
      if (betas[i] == betas[j]) throw std::invalid_argument("build_r: duplicate roots");
  const MultiPoly z = MultiPoly::variable(1, 1);
  MultiPoly r = MultiPoly::constant(1, Rational(1));
  for (const Rational& b : betas) r = r * (z - MultiPoly::constant(1, b));
  return r;
}

namespace {

bool first_coords_distinct(const std::vector<std::vector<Rational>>& pts) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i][0] == pts[j][0]) return false;
  return true;
}

std::vector<std::vector<Rational>> apply_shear(
    const std::vector<std::vector<Rational>>& pts, std::span<const Rational> coeffs) {
  std::vector<std::vector<Rational>> out = pts;
  for (auto& p : out)
    for (size_t k = 0; k < coeffs.size(); ++k) p[0] += coeffs[k] * p[k + 1];
  return out;
}

}  // namespace

Normalization normalize_first_coords(const std::vector<std::vector<Rational>>& points,
                                     NormalizeMode mode) {
  if (points.empty())
    throw std::invalid_argument("normalize_first_coords: need at least one point");
  const int dim = static_cast<int>(points.front().size());
  if (dim < 2)
    throw std::invalid_argument("normalize_first_coords: points must have dimension >= 2");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("normalize_first_coords: mixed point dimensions");

  const long l = static_cast<long>(points.size());
  // each colliding pair rules out at most one slope / one hyperplane, so the
  // search space below always contains a working shear
  const long budget = l * (l - 1) / 2 + 1;

  if (mode == NormalizeMode::Plane) {
    for (long c = 0; c <= budget; ++c) {
      std::vector<Rational> coeffs(dim - 1, Rational(0));
      coeffs[0] = Rational(c);
      auto moved = apply_shear(points, coeffs);
      if (first_coords_distinct(moved)) {
        TriangularAuto t = make_affine2d(dim, Rational(1), Rational(c), Rational(0), Rational(1),
                                         Rational(0), Rational(0));
        return Normalization{std::move(t), std::move(moved)};
      }
    }
    throw std::logic_error("normalize_first_coords: exhausted a provably sufficient range");
  }

  // full mode: per-coordinate coefficients, enumerated by increasing max-norm,
  // lexicographic within a shell — the smallest working vector wins
  const int k = dim - 1;
  for (long shell = 0; shell <= budget; ++shell) {
    std::vector<long> c(k, 0);
    while (true) {
      long maxc = 0;
      for (long v : c) maxc = std::max(maxc, v);
      if (maxc == shell) {
        std::vector<Rational> coeffs;
        coeffs.reserve(k);
        for (long v : c) coeffs.emplace_back(v);
        auto moved = apply_shear(points, coeffs);
        if (first_coords_distinct(moved)) {
          TriangularAuto t = make_shear(dim, coeffs);
          return Normalization{std::move(t), std::move(moved)};
        }
      }
      // odometer over [0, shell]^k
      int pos = k - 1;
      while (pos >= 0 && c[pos] == shell) c[pos--] = 0;
      if (pos < 0) break;
      ++c[pos];
    }
  }
  throw std::logic_error("normalize_first_coords: exhausted a provably sufficient range");
}

PolyMap build_g(const MultiPoly& r, std::span<const MultiPoly> w_polys, int n) {
  if (n < 2) throw std::invalid_argument("build_g: n must be at least 2");
  if (r.num_vars() != 1 || r.total_degree().value_or(0) < 1)
    throw std::invalid_argument("build_g: r must be a nonconstant 1-variable polynomial");
  if (n == 2 && !w_polys.empty())
    throw std::invalid_argument("build_g: no W polynomials allowed for n = 2");
  for (const MultiPoly& q : w_polys) {
    if (q.num_vars() != n)
      throw std::invalid_argument("build_g: W polynomials must live in the n-variable ring");
    if (!q.uses_only_variables_at_least(3))
      throw std::invalid_argument("build_g: W polynomials may only use variables z3..zn");
  }
  const MultiPoly z1 = MultiPoly::variable(n, 1);
  const MultiPoly z2 = MultiPoly::variable(n, 2);
  const MultiPoly rz1 = r.substitute(std::span<const MultiPoly>(&z1, 1));
  const MultiPoly comp2 = rz1 * z2 + MultiPoly::constant(n, Rational(1));
  MultiPoly comp1 = z1 + z2 * comp2;
  for (size_t i = 0; i < w_polys.size(); ++i)
    comp1 += z2.pow(static_cast<int>(i) + 2) * w_polys[i];
  std::vector<MultiPoly> comps{std::move(comp1), comp2};
  for (int i = 3; i <= n; ++i) comps.push_back(MultiPoly::variable(n, i));
  PolyMap g(std::move(comps));

  // deg g1 = max(l+2, max_i(i+1+deg q_i)) exactly: the top monomials cannot
  // collide across the r z2^2 block and the z2^{i+1} q_i blocks
  int expect = r.total_degree().value() + 2;
  for (size_t i = 0; i < w_polys.size(); ++i)
    if (auto qd = w_polys[i].total_degree())
      expect = std::max(expect, static_cast<int>(i) + 2 + *qd);
  if (g.degree() != expect) throw std::logic_error("build_g: degree identity violated");
  return g;
}

PolyMap build_sigma_map(const MultiPoly& r, int n) {
  if (n < 2) throw std::invalid_argument("build_sigma_map: n must be at least 2");
  if (r.num_vars() != 1 || r.total_degree().value_or(0) < 1)
    throw std::invalid_argument("build_sigma_map: r must be a nonconstant 1-variable polynomial");
  const MultiPoly z1 = MultiPoly::variable(n, 1);
  const MultiPoly z2 = MultiPoly::variable(n, 2);
  const MultiPoly rz1 = r.substitute(std::span<const MultiPoly>(&z1, 1));
  const MultiPoly rz2p1 = rz1 * z2 + MultiPoly::constant(n, Rational(1));
  std::vector<MultiPoly> comps{z1 + z2 * rz2p1};
  if (n == 2) {
    comps.push_back(rz2p1);
  } else {
    comps.push_back(rz2p1 + MultiPoly::variable(n, 3));
    for (int k = 3; k < n; ++k)
      comps.push_back(MultiPoly::variable(n, k).pow(2) + MultiPoly::variable(n, k + 1));
    comps.push_back(MultiPoly::variable(n, n).pow(2));
  }
  return PolyMap(std::move(comps));
}

namespace {

PolyMap compose_chain(const std::vector<TriangularAuto>& post, const PolyMap& core) {
  PolyMap acc = core;
  for (const TriangularAuto& a : post) acc = compose(a.forward, acc);
  return acc;
}

ConstructionBundle finish_bundle(ConstructionBundle b) {
  b.check_invariants();
  return b;
}

}  // namespace

void ConstructionBundle::check_invariants() const {
  if (full_map != compose_chain(post_autos, core_map))
    throw std::logic_error("bundle: full_map is not the composition of its factors");
  for (size_t i = 0; i < betas.size(); ++i)
    for (size_t j = i + 1; j < betas.size(); ++j)
      if (betas[i] == betas[j]) throw std::logic_error("bundle: betas not pairwise distinct");
  if (r_poly != build_r(betas)) throw std::logic_error("bundle: r_poly != prod(z1 - beta_j)");
  for (const TriangularAuto& a : post_autos) {
    const PolyMap id = PolyMap::identity(n);
    if (compose(a.forward, a.inverse) != id || compose(a.inverse, a.forward) != id)
      throw std::logic_error("bundle: post automorphism round-trip failed");
  }
  if (full_map.degree().value_or(0) != degree)
    throw std::logic_error("bundle: recorded degree does not match the map");
  if (degree > degree_bound) throw std::logic_error("bundle: degree exceeds its bound");
}

ConstructionBundle build_lemma_bundle(std::span<const Rational> betas,
                                      std::vector<MultiPoly> w_polys, int n) {
  if (betas.empty()) throw std::invalid_argument("build_lemma_bundle: needs at least one root");
  MultiPoly r = build_r(betas);
  PolyMap g = build_g(r, w_polys, n);

  ZSpec z;
  z.n = n;
  for (const Rational& b : betas) z.points.push_back({b, Rational(0)});
  z.w_polys = std::move(w_polys);
  z.canonicalize();

  const int l = static_cast<int>(betas.size());
  const int m = z.m();
  const int d = z.max_w_degree();
  ConstructionBundle b{Family::LemmaG,
                       n,
                       g,
                       {},
                       g,
                       std::vector<Rational>(betas.begin(), betas.end()),
                       std::move(r),
                       std::move(z),
                       g.degree().value(),
                       m >= 1 ? std::max(l + 2, m + d + 1) : l + 2,
                       {}};
  return finish_bundle(std::move(b));
}

ConstructionBundle build_theorem_map(const ZSpec& spec) {
  ZSpec s = spec;
  s.canonicalize();
  const int n = s.n;
  if (s.point_dim() != 0 && s.point_dim() != 2)
    throw std::invalid_argument("build_theorem_map: F must be a plane point set");

  const int l = s.l();
  if (l == 0) {
    // nothing to avoid: the identity map is surjective onto all of A^n
    PolyMap id = PolyMap::identity(n);
    ConstructionBundle b{Family::TheoremF, n,  id, {}, id, {},
                         MultiPoly::constant(1, Rational(1)), std::move(s), 1, 1, {}};
    return finish_bundle(std::move(b));
  }

  Normalization norm = normalize_first_coords(s.points, NormalizeMode::Plane);
  std::vector<Rational> betas;
  std::vector<std::pair<Rational, Rational>> nodes;
  betas.reserve(l);
  for (const auto& p : norm.points) {
    betas.push_back(p[0]);
    nodes.emplace_back(p[0], p[1]);
  }
  MultiPoly r = build_r(betas);
  PolyMap g = build_g(r, s.w_polys, n);

  std::vector<MultiPoly> shifts(n - 1, MultiPoly(1));
  shifts[0] = lagrange_interpolate(nodes);
  TriangularAuto h = make_lagrange_shift(n, shifts);
  TriangularAuto t_inv = inverted(extend_identity(norm.t, n));

  std::vector<TriangularAuto> post{std::move(h), std::move(t_inv)};
  PolyMap full = compose_chain(post, g);

  ZSpec z_norm;
  z_norm.n = n;
  z_norm.points = std::move(norm.points);
  z_norm.w_polys = s.w_polys;

  const int m = s.m();
  const int d = s.max_w_degree();
  const int g_bound = m >= 1 ? std::max(l + 2, m + d + 1) : l + 2;
  ConstructionBundle b{Family::TheoremF,
                       n,
                       std::move(g),
                       std::move(post),
                       std::move(full),
                       std::move(betas),
                       std::move(r),
                       std::move(z_norm),
                       0,
                       std::max(1, l - 1) * g_bound,
                       {}};
  b.degree = b.full_map.degree().value();
  return finish_bundle(std::move(b));
}

ConstructionBundle build_sigma(const ZSpec& spec) {
  ZSpec s = spec;
  s.canonicalize();
  const int n = s.n;
  if (s.m() != 0)
    throw std::invalid_argument("build_sigma: the point pipeline takes a finite set only (m = 0)");
  if (s.l() == 0)
    throw std::invalid_argument(
        "build_sigma: empty F is handled by the identity path of build_theorem_map");
  if (s.point_dim() != n)
    throw std::invalid_argument("build_sigma: points must live in A^n");

  const int l = s.l();
  Normalization norm = normalize_first_coords(s.points, NormalizeMode::Full);
  std::vector<Rational> betas;
  betas.reserve(l);
  for (const auto& p : norm.points) betas.push_back(p[0]);
  MultiPoly r = build_r(betas);
  PolyMap sigma = build_sigma_map(r, n);

  std::vector<MultiPoly> shifts;
  shifts.reserve(n - 1);
  for (int i = 2; i <= n; ++i) {
    std::vector<std::pair<Rational, Rational>> nodes;
    nodes.reserve(l);
    for (const auto& p : norm.points) nodes.emplace_back(p[0], p[i - 1]);
    shifts.push_back(lagrange_interpolate(nodes));
  }
  TriangularAuto h = make_lagrange_shift(n, shifts);
  TriangularAuto t_inv = inverted(norm.t);

  std::vector<TriangularAuto> post{std::move(h), std::move(t_inv)};
  PolyMap full = compose_chain(post, sigma);

  // collinear F keeps every interpolation shift affine, which pins the degree
  // to exactly l+2; l <= 2 is always collinear
  const bool collinear = points_collinear(s.points);
  const int bound = collinear ? l + 2 : (l - 1) * (l + 2);

  ZSpec z_norm;
  z_norm.n = n;
  z_norm.points = std::move(norm.points);

  ConstructionBundle b{Family::PropSigma,
                       n,
                       std::move(sigma),
                       std::move(post),
                       std::move(full),
                       std::move(betas),
                       std::move(r),
                       std::move(z_norm),
                       0,
                       bound,
                       {}};
  b.degree = b.full_map.degree().value();
  return finish_bundle(std::move(b));
}

ConstructionBundle build_many_points_example(int n, int d) {
  if (!(d >= n && n > 2))
    throw std::invalid_argument("build_many_points_example: requires d >= n > 2");

  ZSpec s;
  s.n = n;
  for (int j = 1; j <= d - 2; ++j) s.points.push_back({Rational(j), Rational(0)});
  for (int i = 1; i <= n - 2; ++i) {
    const MultiPoly zi = MultiPoly::variable(n, i + 2);
    MultiPoly q = MultiPoly::constant(n, Rational(1));
    for (int j = 1; j <= d - i - 1; ++j) q = q * (zi - MultiPoly::constant(n, Rational(j)));
    s.w_polys.push_back(std::move(q));
  }

  ConstructionBundle b = build_theorem_map(s);
  b.family = Family::ExampleManyPoints;
  b.degree_bound = d;  // this construction attains degree d exactly
  if (b.degree != d) throw std::logic_error("build_many_points_example: degree != d");

  // complement = {1..d-2} x {0} x {1..d-2} x {1..d-3} x ... x {1..d-n+1}
  std::vector<std::vector<Rational>> complement;
  std::vector<int> x(n - 2, 1);
  while (true) {
    for (int a = 1; a <= d - 2; ++a) {
      std::vector<Rational> pt{Rational(a), Rational(0)};
      for (int v : x) pt.emplace_back(v);
      complement.push_back(std::move(pt));
    }
    int pos = n - 3;
    while (pos >= 0 && x[pos] == d - pos - 2) x[pos--] = 1;
    if (pos < 0) break;
    ++x[pos];
  }

  mpz_class expected = d - 2;  // (d-2) * (d-2)!/(d-n)!
  for (int v = d - 2; v > d - n; --v) expected *= v;
  if (expected != static_cast<long>(complement.size()))
    throw std::logic_error("build_many_points_example: complement count mismatch");

  b.complement_points = std::move(complement);
  b.check_invariants();
  return b;
}

bool points_collinear(const std::vector<std::vector<Rational>>& points) {
  if (points.size() <= 2) return true;
  const size_t dim = points.front().size();
  // direction = first nonzero difference from points[0]
  std::vector<Rational> dir;
  for (size_t j = 1; j < points.size() && dir.empty(); ++j) {
    std::vector<Rational> v(dim);
    bool nonzero = false;
    for (size_t a = 0; a < dim; ++a) {
      v[a] = points[j][a] - points[0][a];
      if (v[a] != 0) nonzero = true;
    }
    if (nonzero) dir = std::move(v);
  }
  if (dir.empty()) return true;  // all points equal
  for (size_t j = 1; j < points.size(); ++j) {
    for (size_t a = 0; a < dim; ++a) {
      for (size_t bb = a + 1; bb < dim; ++bb) {
        const Rational va = points[j][a] - points[0][a];
        const Rational vb = points[j][bb] - points[0][bb];
        if (va * dir[bb] != vb * dir[a]) return false;
      }
    }
  }
  return true;
}

}  // namespace asurj
