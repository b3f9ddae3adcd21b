#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asurj/construct.hpp"
#include "asurj/parse.hpp"
#include "oracles.hpp"

using namespace asurj;
using namespace asurj::testing;

namespace {

ZSpec nodal_cubic_spec() {
  ZSpec s;
  s.n = 4;
  s.points = {{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}};
  s.w_polys = {parse_poly("z3^2 - z4^3 - z4^2", 4)};
  return s;
}

std::vector<Rational> betas_of(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("build_r") {
  CHECK(build_r(betas_of({0})) == parse_poly("z1", 1));
  CHECK(build_r(betas_of({1, -1})) == parse_poly("z1^2 - 1", 1));
  CHECK(build_r(betas_of({1, 2})) == parse_poly("z1^2 - 3*z1 + 2", 1));
  CHECK(build_r({}) == MultiPoly::constant(1, Rational(1)));
  CHECK_THROWS_AS(build_r(betas_of({1, 1})), std::invalid_argument);
}

TEST_CASE("normalize_first_coords") {
  SUBCASE("already distinct: identity") {
    const auto norm = normalize_first_coords({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}},
                                             NormalizeMode::Plane);
    CHECK(norm.t.forward == PolyMap::identity(2));
    CHECK(norm.points == std::vector<std::vector<Rational>>{{Rational(0), Rational(0)},
                                                            {Rational(1), Rational(1)}});
  }
  SUBCASE("vertical pair: smallest shear c=1") {
    const auto norm = normalize_first_coords({{Rational(0), Rational(0)}, {Rational(0), Rational(1)}},
                                             NormalizeMode::Plane);
    CHECK(norm.t.forward == PolyMap({parse_poly("z1 + z2", 2), parse_poly("z2", 2)}));
    CHECK(norm.points == std::vector<std::vector<Rational>>{{Rational(0), Rational(0)},
                                                            {Rational(1), Rational(1)}});
  }
  SUBCASE("vertical triple: c=1 still works") {
    const auto norm = normalize_first_coords(
        {{Rational(0), Rational(0)}, {Rational(0), Rational(1)}, {Rational(0), Rational(2)}},
        NormalizeMode::Plane);
    CHECK(norm.points == std::vector<std::vector<Rational>>{{Rational(0), Rational(0)},
                                                            {Rational(1), Rational(1)},
                                                            {Rational(2), Rational(2)}});
  }
  SUBCASE("full mode separates points a shared coefficient cannot") {
    // (0,1,0) and (0,0,1) have equal coordinate sums
    const auto norm = normalize_first_coords(
        {{Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(1)}},
        NormalizeMode::Full);
    CHECK(norm.points[0][0] != norm.points[1][0]);
  }
  SUBCASE("results always have pairwise distinct first coordinates") {
    SplitMix64 g(43);
    for (int it = 0; it < 60; ++it) {
      const int dim = static_cast<int>(g.range(2, 5));
      std::vector<std::vector<Rational>> pts;
      const int l = static_cast<int>(g.range(1, 6));
      for (int i = 0; i < l; ++i) pts.push_back(rand_point(g, dim, 2));
      // dedupe exact duplicates first (ZSpec would have)
      std::vector<std::vector<Rational>> uniq;
      for (auto& p : pts)
        if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
      const auto norm = normalize_first_coords(uniq, NormalizeMode::Full);
      for (size_t i = 0; i < norm.points.size(); ++i)
        for (size_t j = i + 1; j < norm.points.size(); ++j)
          CHECK(norm.points[i][0] != norm.points[j][0]);
      // the recorded automorphism actually maps input to output
      for (size_t i = 0; i < uniq.size(); ++i)
        CHECK(norm.t.forward.eval(uniq[i]) == norm.points[i]);
    }
  }
}

TEST_CASE("build_g") {
  SUBCASE("n=2 with r=z1 is the degree-3 plane map") {
    const PolyMap g = build_g(parse_poly("z1", 1), {}, 2);
    CHECK(g == PolyMap({parse_poly("z1 + z2*(z1*z2 + 1)", 2), parse_poly("z1*z2 + 1", 2)}));
    CHECK(g.degree() == 3);
  }
  SUBCASE("the two-copies nodal-cubic map, verbatim") {
    const MultiPoly q = parse_poly("z3^2 - z4^3 - z4^2", 4);
    const PolyMap g = build_g(parse_poly("z1^2 - 1", 1), std::vector<MultiPoly>{q}, 4);
    CHECK(g.component(1) ==
          parse_poly("z1 + z2*((z1^2 - 1)*z2 + 1) + z2^2*(z3^2 - z4^3 - z4^2)", 4));
    CHECK(g.component(2) == parse_poly("(z1^2 - 1)*z2 + 1", 4));
    CHECK(g.component(3) == parse_poly("z3", 4));
    CHECK(g.component(4) == parse_poly("z4", 4));
    CHECK(g.degree() == 5);
  }
  SUBCASE("tail components are identity coordinates") {
    SplitMix64 rng(47);
    for (int it = 0; it < 20; ++it) {
      const int n = static_cast<int>(rng.range(3, 6));
      std::vector<MultiPoly> qs{rand_w_poly(rng, n, 3)};
      const int l = static_cast<int>(rng.range(1, 4));
      std::vector<Rational> betas;
      for (int i = 0; i < l; ++i) betas.emplace_back(static_cast<long>(i));
      const PolyMap g = build_g(build_r(betas), qs, n);
      for (int i = 3; i <= n; ++i) CHECK(g.component(i) == MultiPoly::variable(n, i));
    }
  }
  SUBCASE("second component at (beta_j, 0, x) is exactly 1") {
    SplitMix64 rng(53);
    for (int it = 0; it < 40; ++it) {
      const int n = static_cast<int>(rng.range(2, 6));
      std::vector<Rational> betas;
      const int l = static_cast<int>(rng.range(1, 5));
      for (int i = 0; i < l; ++i) {
        Rational b;
        do {
          b = rand_rational(rng);
        } while (std::find(betas.begin(), betas.end(), b) != betas.end());
        betas.push_back(b);
      }
      std::vector<MultiPoly> qs;
      if (n > 2) qs.push_back(rand_w_poly(rng, n, 3));
      const PolyMap g = build_g(build_r(betas), qs, n);
      for (const Rational& b : betas) {
        std::vector<Rational> z = rand_point(rng, n, 6);
        z[0] = b;
        z[1] = 0;
        CHECK(g.component(2).eval(z) == 1);
      }
    }
  }
  SUBCASE("rejects bad inputs") {
    CHECK_THROWS_AS(build_g(MultiPoly::constant(1, Rational(2)), {}, 2), std::invalid_argument);
    const MultiPoly uses_z2 = parse_poly("z2 + z3", 4);
    CHECK_THROWS_AS(build_g(parse_poly("z1", 1), std::vector<MultiPoly>{uses_z2}, 4),
                    std::invalid_argument);
  }
}

TEST_CASE("build_theorem_map") {
  SUBCASE("two-copies nodal cubic reproduces the published map exactly") {
    const ConstructionBundle b = build_theorem_map(nodal_cubic_spec());
    CHECK(b.full_map.component(1) ==
          parse_poly("z1 + z2*((z1^2 - 1)*z2 + 1) + z2^2*(z3^2 - z4^3 - z4^2)", 4));
    CHECK(b.full_map == b.core_map);  // t and h are trivial here
    CHECK(b.degree == 5);
    CHECK(b.degree_bound == 5);  // max(1,1) * max(4, 1+3+1)
    CHECK(b.betas == betas_of({1, -1}));
    CHECK(b.family == Family::TheoremF);
  }
  SUBCASE("single origin point gives the degree-3 plane map") {
    ZSpec s;
    s.n = 2;
    s.points = {{Rational(0), Rational(0)}};
    const ConstructionBundle b = build_theorem_map(s);
    CHECK(b.full_map == PolyMap({parse_poly("z1 + z2*(z1*z2 + 1)", 2), parse_poly("z1*z2 + 1", 2)}));
    CHECK(b.degree == 3);
    CHECK(b.degree_bound == 3);
  }
  SUBCASE("empty F yields the identity with bound 1") {
    ZSpec s;
    s.n = 3;
    const ConstructionBundle b = build_theorem_map(s);
    CHECK(b.full_map == PolyMap::identity(3));
    CHECK(b.degree == 1);
    CHECK(b.degree_bound == 1);
    CHECK(b.betas.empty());
  }
  SUBCASE("duplicate points are dropped") {
    ZSpec s;
    s.n = 2;
    s.points = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    const ConstructionBundle b = build_theorem_map(s);
    CHECK(b.betas.size() == 1);
  }
  SUBCASE("random specs satisfy the degree bound, symbolically") {
    SplitMix64 g(59);
    for (int it = 0; it < 30; ++it) {
      const int n = static_cast<int>(g.range(2, 5));
      const ZSpec s = rand_plane_spec(g, n, 6, 3, 4);
      const ConstructionBundle b = build_theorem_map(s);  // check_invariants runs inside
      CHECK(b.degree <= b.degree_bound);
      CHECK(b.full_map.degree().value_or(0) == b.degree);
    }
  }
}

TEST_CASE("build_sigma") {
  SUBCASE("origin in A^3: the degree-3 punctured-space map") {
    ZSpec s;
    s.n = 3;
    s.points = {{Rational(0), Rational(0), Rational(0)}};
    const ConstructionBundle b = build_sigma(s);
    CHECK(b.core_map == PolyMap({parse_poly("z1 + z2*(z1*z2 + 1)", 3),
                                 parse_poly("z1*z2 + 1 + z3", 3), parse_poly("z3^2", 3)}));
    CHECK(b.full_map == b.core_map);
    CHECK(b.degree == 3);
    CHECK(b.degree_bound == 3);
    CHECK(b.family == Family::PropSigma);
  }
  SUBCASE("two collinear points: degree exactly 4") {
    ZSpec s;
    s.n = 3;
    s.points = {{Rational(0), Rational(0), Rational(0)}, {Rational(1), Rational(0), Rational(0)}};
    const ConstructionBundle b = build_sigma(s);
    CHECK(b.degree == 4);
    CHECK(b.degree_bound == 4);
  }
  SUBCASE("collinear sets report degree exactly l+2") {
    SplitMix64 g(61);
    for (int it = 0; it < 20; ++it) {
      const int n = static_cast<int>(g.range(2, 5));
      const int l = static_cast<int>(g.range(3, 6));
      const auto base = rand_point(g, n, 3);
      auto dir = rand_point(g, n, 3);
      if (std::all_of(dir.begin(), dir.end(), [](const Rational& x) { return x == 0; }))
        dir[0] = 1;
      ZSpec s;
      s.n = n;
      for (int i = 0; i < l; ++i) {
        std::vector<Rational> p(n);
        for (int k = 0; k < n; ++k) p[k] = base[k] + Rational(static_cast<long>(i)) * dir[k];
        s.points.push_back(std::move(p));
      }
      s.canonicalize();
      if (s.l() < 3) continue;  // degenerate direction collapsed points
      const ConstructionBundle b = build_sigma(s);
      CHECK(b.degree == s.l() + 2);
      CHECK(b.degree_bound == s.l() + 2);
    }
  }
  SUBCASE("general position satisfies (l-1)(l+2)") {
    SplitMix64 g(67);
    for (int it = 0; it < 15; ++it) {
      const int n = static_cast<int>(g.range(2, 5));
      const int l = static_cast<int>(g.range(1, 6));
      ZSpec s;
      s.n = n;
      for (int i = 0; i < l; ++i) s.points.push_back(rand_point(g, n, 4));
      s.canonicalize();
      const ConstructionBundle b = build_sigma(s);
      CHECK(b.degree <= b.degree_bound);
      const int lf = s.l();
      if (points_collinear(s.points))
        CHECK(b.degree_bound == lf + 2);
      else
        CHECK(b.degree_bound == (lf - 1) * (lf + 2));
    }
  }
  SUBCASE("rejects m != 0 and empty F") {
    ZSpec s = nodal_cubic_spec();
    CHECK_THROWS_AS(build_sigma(s), std::invalid_argument);
    ZSpec empty;
    empty.n = 3;
    CHECK_THROWS_AS(build_sigma(empty), std::invalid_argument);
  }
}

TEST_CASE("points_collinear") {
  CHECK(points_collinear({}));
  CHECK(points_collinear({{Rational(1), Rational(2)}}));
  CHECK(points_collinear({{Rational(0), Rational(0)}, {Rational(5), Rational(3)}}));
  CHECK(points_collinear(
      {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(2)}}));
  CHECK(!points_collinear(
      {{Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {Rational(2), Rational(3)}}));
  CHECK(points_collinear({{Rational(0), Rational(1), Rational(2)},
                          {Rational(0), Rational(1), Rational(5)},
                          {Rational(0), Rational(1), Rational(-1)}}));
}

TEST_CASE("build_many_points_example") {
  SUBCASE("n=3, d=4: four avoided points") {
    const ConstructionBundle b = build_many_points_example(3, 4);
    CHECK(b.degree == 4);
    CHECK(b.degree_bound == 4);
    REQUIRE(b.complement_points.size() == 4);
    // {1,2} x {0} x {1,2}
    for (const auto& p : b.complement_points) {
      CHECK((p[0] == 1 || p[0] == 2));
      CHECK(p[1] == 0);
      CHECK((p[2] == 1 || p[2] == 2));
    }
  }
  SUBCASE("n=4, d=5: 18 points") {
    const ConstructionBundle b = build_many_points_example(4, 5);
    CHECK(b.complement_points.size() == 18);
    CHECK(b.degree == 5);
  }
  SUBCASE("degree equals d across parameters") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 3}, {3, 6}, {4, 6}, {5, 7}}) {
      const ConstructionBundle b = build_many_points_example(n, d);
      CHECK(b.degree == d);
      CHECK(b.family == Family::ExampleManyPoints);
    }
  }
  CHECK_THROWS_AS(build_many_points_example(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_many_points_example(4, 3), std::invalid_argument);
}

TEST_CASE("bundles expose their exact factorization") {
  SplitMix64 g(71);
  for (int it = 0; it < 10; ++it) {
    const ZSpec s = rand_plane_spec(g, 4, 4, 2, 3);
    const ConstructionBundle b = build_theorem_map(s);
    PolyMap acc = b.core_map;
    for (const TriangularAuto& a : b.post_autos) acc = compose(a.forward, acc);
    CHECK(acc == b.full_map);
    CHECK(b.r_poly == build_r(b.betas));
  }
}
