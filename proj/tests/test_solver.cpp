#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "asurj/parse.hpp"
#include "asurj/solver.hpp"
#include "asurj/verify.hpp"
#include "oracles.hpp"

using namespace asurj;
using namespace asurj::testing;

namespace {

ConstructionBundle nodal_cubic_bundle() {
  ZSpec s;
  s.n = 4;
  s.points = {{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}};
  s.w_polys = {parse_poly("z3^2 - z4^3 - z4^2", 4)};
  return build_theorem_map(s);
}

ConstructionBundle punctured_sigma(int n) {
  ZSpec s;
  s.n = n;
  s.points = {std::vector<Rational>(n, Rational(0))};
  return build_sigma(s);
}

std::vector<Rational> rat_point(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

bool contains_witness(const PreimageSet& ps, const std::vector<Complex>& z, double tol = 1e-6) {
  for (const auto& w : ps.witnesses) {
    double d = 0;
    for (size_t i = 0; i < w.size(); ++i) d = std::max(d, std::abs(w[i] - z[i]));
    if (d <= tol) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("residual_poly_g on the nodal-cubic bundle") {
  const ConstructionBundle b = nodal_cubic_bundle();

  SUBCASE("a Z point reduces to the constant 1") {
    // (1,0) x (0,0): (0,0) lies on the nodal cubic
    const SolvabilityVerdict v = residual_poly_g(b, rat_point({1, 0, 0, 0}));
    CHECK(v.kind == VerdictKind::Empty);
    CHECK(v.exact);
    REQUIRE(v.empty_constant.has_value());
    CHECK(*v.empty_constant == 1);
    CHECK(std::get<MultiPoly>(v.residual) == MultiPoly::constant(1, Rational(1)));
  }
  SUBCASE("the origin gives residual 1 - z2") {
    const SolvabilityVerdict v = residual_poly_g(b, rat_point({0, 0, 0, 0}));
    CHECK(v.kind == VerdictKind::Finite);
    CHECK(std::get<MultiPoly>(v.residual) == parse_poly("1 - z1", 1));
  }
  SUBCASE("(0,1,0,0) gives residual z2^3 - z2") {
    const SolvabilityVerdict v = residual_poly_g(b, rat_point({0, 1, 0, 0}));
    CHECK(v.kind == VerdictKind::Finite);
    CHECK(std::get<MultiPoly>(v.residual) == parse_poly("z1^3 - z1", 1));
  }
  SUBCASE("dimension mismatch rejected") {
    CHECK_THROWS_AS(residual_poly_g(b, rat_point({1, 0})), std::invalid_argument);
  }
}

TEST_CASE("preimage_g on the nodal-cubic bundle") {
  const ConstructionBundle b = nodal_cubic_bundle();

  SUBCASE("witness at the origin") {
    const PreimageSet ps = preimage_g(b, rat_point({0, 0, 0, 0}));
    REQUIRE(ps.witnesses.size() == 1);
    CHECK(contains_witness(ps, {Complex(0, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0)}));
    CHECK(ps.residuals[0] <= 1e-10);
  }
  SUBCASE("exact empty over Z") {
    const PreimageSet ps = preimage_g(b, rat_point({1, 0, 0, 0}));
    CHECK(ps.exact_empty);
    CHECK(ps.witnesses.empty());
  }
  SUBCASE("three witnesses over (0,1,0,0), one of them the origin") {
    const PreimageSet ps = preimage_g(b, rat_point({0, 1, 0, 0}));
    CHECK(ps.witnesses.size() == 3);
    CHECK(contains_witness(ps, {Complex(0, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0)}));
    CHECK(contains_witness(ps, {Complex(-1, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0)}));
    CHECK(contains_witness(ps, {Complex(1, 0), Complex(-1, 0), Complex(0, 0), Complex(0, 0)}));
  }
  SUBCASE("complex targets take the numeric path") {
    const std::vector<Complex> w{Complex(0.5, 0.5), Complex(1, 0), Complex(0, 0), Complex(0, 0)};
    const PreimageSet ps = preimage_g(b, w, 1e-8);
    CHECK(!ps.exact_empty);
    CHECK(!ps.witnesses.empty());
  }
}

TEST_CASE("preimage_sigma") {
  SUBCASE("n=3 origin bundle: avoided point is exactly empty") {
    const ConstructionBundle b = punctured_sigma(3);
    const PreimageSet ps = preimage_sigma(b, rat_point({0, 0, 0}));
    CHECK(ps.exact_empty);
    CHECK(ps.witnesses.empty());
  }
  SUBCASE("n=3, w=(0,0,1): includes the (i sqrt2, i sqrt2, 1) branch witness") {
    const ConstructionBundle b = punctured_sigma(3);
    const PreimageSet ps = preimage_sigma(b, rat_point({0, 0, 1}));
    CHECK(!ps.witnesses.empty());
    const double s2 = std::sqrt(2.0);
    CHECK(contains_witness(ps, {Complex(0, s2), Complex(0, s2), Complex(1, 0)}));
  }
  SUBCASE("n=2, w=(5,1): witnesses (5,0) and (0,5)") {
    const ConstructionBundle b = punctured_sigma(2);
    const PreimageSet ps = preimage_sigma(b, rat_point({5, 1}));
    CHECK(ps.witnesses.size() == 2);
    CHECK(contains_witness(ps, {Complex(5, 0), Complex(0, 0)}));
    CHECK(contains_witness(ps, {Complex(0, 0), Complex(5, 0)}));

    // brute-force oracle: every integer-grid preimage the map actually has
    // must appear among the witnesses
    for (long z1 = -8; z1 <= 8; ++z1)
      for (long z2 = -8; z2 <= 8; ++z2) {
        const std::vector<Rational> z{Rational(z1), Rational(z2)};
        if (b.full_map.eval(z) == rat_point({5, 1}))
          CHECK(contains_witness(ps, {Complex(static_cast<double>(z1), 0),
                                      Complex(static_cast<double>(z2), 0)}));
      }
  }
  SUBCASE("every witness verifies forward") {
    SplitMix64 g(73);
    for (int n : {2, 3, 4}) {
      const ConstructionBundle b = punctured_sigma(n);
      for (int it = 0; it < 25; ++it) {
        const auto w = rand_point(g, n, 6);
        if (membership_in_Z(b, w)) continue;
        const PreimageSet ps = preimage_sigma(b, w, 1e-8);
        CHECK(!ps.witnesses.empty());
        for (double r : ps.residuals) CHECK(r <= 1e-8);
      }
    }
  }
}

TEST_CASE("membership_in_Z") {
  const ConstructionBundle b = nodal_cubic_bundle();
  CHECK(membership_in_Z(b, rat_point({1, 0, 0, 0})));
  CHECK(!membership_in_Z(b, rat_point({0, 0, 0, 0})));
  CHECK(!membership_in_Z(b, rat_point({1, 0, 3, 2})));  // q(3,2) = -3 != 0
  CHECK(membership_in_Z(b, rat_point({-1, 0, 0, 0})));
  // nodal-cubic parametrized points are in W
  for (long t : {-2L, -1L, 0L, 1L, 2L, 3L}) {
    const auto wpt = nodal_cubic_point(Rational(t));
    const std::vector<Rational> probe{Rational(1), Rational(0), wpt[0], wpt[1]};
    CHECK(membership_in_Z(b, probe));
  }

  const ConstructionBundle sig = punctured_sigma(3);
  CHECK(membership_in_Z(sig, rat_point({0, 0, 0})));
  CHECK(!membership_in_Z(sig, rat_point({0, 0, 1})));

  // identity bundle: nothing is in Z
  ZSpec empty;
  empty.n = 3;
  const ConstructionBundle id = build_theorem_map(empty);
  CHECK(!membership_in_Z(id, rat_point({0, 0, 0})));
  const PreimageSet ps = preimage(id, rat_point({4, -2, 7}));
  REQUIRE(ps.witnesses.size() == 1);
  CHECK(contains_witness(ps, {Complex(4, 0), Complex(-2, 0), Complex(7, 0)}));
}

TEST_CASE("membership agrees with the exact Empty verdict") {
  SplitMix64 g(79);
  std::vector<ConstructionBundle> bundles;
  bundles.push_back(nodal_cubic_bundle());
  bundles.push_back(punctured_sigma(3));
  bundles.push_back(build_many_points_example(3, 4));
  {
    ZSpec s;
    s.n = 3;
    s.points = {{Rational(2), Rational(1), Rational(0)},
                {Rational(0), Rational(1), Rational(1)},
                {Rational(-1), Rational(-1), Rational(2)}};
    bundles.push_back(build_sigma(s));
  }
  for (const ConstructionBundle& b : bundles) {
    // random grid points
    for (int it = 0; it < 150; ++it) {
      const auto w = rand_point(g, b.n, 5);
      const SolvabilityVerdict v = classify_exact(b, w);
      CHECK(v.exact);
      CHECK(membership_in_Z(b, w) == (v.kind == VerdictKind::Empty));
      // the verdict kinds mirror the residual's shape
      if (std::holds_alternative<MultiPoly>(v.residual)) {
        const MultiPoly& rho = std::get<MultiPoly>(v.residual);
        CHECK((v.kind == VerdictKind::Empty) ==
              (!rho.is_zero() && rho.total_degree() == 0));
        CHECK((v.kind == VerdictKind::AllZ2) == rho.is_zero());
      }
    }
    // and every known Z point
    if (b.family == Family::ExampleManyPoints) {
      for (const auto& p : b.complement_points) {
        CHECK(membership_in_Z(b, p));
        CHECK(classify_exact(b, p).kind == VerdictKind::Empty);
      }
    }
    if (b.family == Family::PropSigma) {
      // z_normalized holds t(F); membership works in original coordinates, so
      // push each normalized point back through t^{-1} (the last post auto's
      // forward map)
      const TriangularAuto& t_inv = b.post_autos.back();
      for (const auto& p : b.z_normalized.points) {
        const std::vector<Rational> orig = t_inv.forward.eval(p);
        CHECK(membership_in_Z(b, orig));
        CHECK(classify_exact(b, orig).kind == VerdictKind::Empty);
      }
    }
  }
}

TEST_CASE("finite verdicts at off-Z rational points produce verified witnesses") {
  const ConstructionBundle b = nodal_cubic_bundle();
  SplitMix64 g(83);
  int tested = 0;
  while (tested < 60) {
    const auto w = rand_point(g, 4, 6);
    if (membership_in_Z(b, w)) continue;
    ++tested;
    const SolvabilityVerdict v = residual_poly_g(b, w);
    CHECK(v.kind == VerdictKind::Finite);
    CHECK(std::get<MultiPoly>(v.residual).total_degree().value_or(0) >= 1);
    const PreimageSet ps = preimage_g(b, w, 1e-8);
    CHECK(!ps.witnesses.empty());
    for (double r : ps.residuals) CHECK(r <= 1e-8);
  }
}

TEST_CASE("pullback consistency: solving full at w = solving core at pulled-back w") {
  // a bundle with nontrivial t and h
  ZSpec s;
  s.n = 2;
  s.points = {{Rational(0), Rational(1)}, {Rational(0), Rational(-1)}};
  const ConstructionBundle b = build_theorem_map(s);
  REQUIRE(b.full_map != b.core_map);

  // the bare lemma bundle shares r and the W data, so it carries exactly the
  // core map with no conjugation
  const ConstructionBundle core_only =
      build_lemma_bundle(b.betas, b.z_normalized.w_polys, b.n);
  REQUIRE(core_only.full_map == b.core_map);

  SplitMix64 g(89);
  for (int it = 0; it < 40; ++it) {
    const auto w = rand_point(g, 2, 5);
    if (membership_in_Z(b, w)) continue;
    const auto wc = pull_back_target(b, w);
    const PreimageSet full_ps = preimage_g(b, w, 1e-7);
    const PreimageSet core_ps = preimage_g(core_only, wc, 1e-7);
    REQUIRE(full_ps.witnesses.size() == core_ps.witnesses.size());
    for (const auto& z : core_ps.witnesses) CHECK(contains_witness(full_ps, z, 1e-5));
  }
}
