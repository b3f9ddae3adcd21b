// asurj: construct endomorphisms of affine n-space whose image is the
// complement of a prescribed set Z = F x W, solve preimages, and audit the
// construction. Exit codes: 0 pass, 1 audit failure, 2 usage/parse error.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "asurj/parse.hpp"
#include "asurj/serialize.hpp"
#include "asurj/verify.hpp"

using namespace asurj;

namespace {

void print_bundle(const ConstructionBundle& b) {
  std::cout << "bundle: " << bundle_summary(b) << "\n";
  std::cout << "f = " << print_map(b.full_map) << "\n";
  if (b.full_map != b.core_map)
    std::cout << "core = " << print_map(b.core_map) << "  (conjugated by "
              << b.post_autos.size() << " automorphism(s))\n";
  if (!b.complement_points.empty())
    std::cout << "avoided points: " << b.complement_points.size() << "\n";
}

void print_report(const AuditReport& rep, bool as_json) {
  if (as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
    return;
  }
  std::cout << "audit: " << rep.bundle_summary << "\n";
  std::cout << "  degree " << rep.degree_observed << " <= bound " << rep.degree_bound << "\n";
  if (rep.z_probes_tested)
    std::cout << "  z-probes exact-empty: " << rep.z_probes_empty << "/" << rep.z_probes_tested
              << "\n";
  if (rep.samples_tested || rep.samples_skipped)
    std::cout << "  samples witnessed: " << rep.samples_with_witness << "/" << rep.samples_tested
              << " (skipped " << rep.samples_skipped << " in Z, seed " << rep.seed << ")\n";
  for (const AuditFailure& f : rep.failures) {
    std::cout << "  FAILURE [" << f.check << "] at (";
    for (size_t i = 0; i < f.point.size(); ++i) std::cout << (i ? "," : "") << f.point[i];
    std::cout << "): " << f.detail << "\n";
  }
  std::cout << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.elapsed_seconds << "s)\n";
}

ConstructionBundle load_bundle(const std::string& path) {
  return bundle_from_json(load_json_file(path));
}

int run_construct(const std::string& spec_path, const std::string& family,
                  const std::string& out_path, bool as_json) {
  const Json sj = load_json_file(spec_path);
  ConstructionBundle b = [&] {
    if (family == "many-points") {
      if (!sj.contains("n") || !sj.contains("d"))
        throw std::invalid_argument("many-points spec needs \"n\" and \"d\"");
      return build_many_points_example(sj["n"].get<int>(), sj["d"].get<int>());
    }
    std::vector<std::string> notes;
    ZSpec spec = zspec_from_json(sj);
    spec.canonicalize(&notes);
    for (const std::string& note : notes) std::cerr << "note: " << note << "\n";
    if (family == "theorem") return build_theorem_map(spec);
    if (family == "sigma") return build_sigma(spec);
    throw std::invalid_argument("--family expects theorem|sigma|many-points");
  }();
  if (!out_path.empty()) write_json_file(out_path, to_json(b));
  if (as_json)
    std::cout << to_json(b).dump(2) << "\n";
  else
    print_bundle(b);
  return 0;
}

int run_preimage(const std::string& bundle_path, const std::string& point, double tol,
                 bool as_json) {
  const ConstructionBundle b = load_bundle(bundle_path);
  Json out;
  PreimageSet ps;
  if (point_is_rational(point)) {
    const std::vector<Rational> w = parse_rational_point(point);
    const SolvabilityVerdict v = classify_exact(b, w);
    ps = preimage(b, w, tol);
    out["exact"] = true;
    out["verdict"] = verdict_kind_name(v.kind);
    if (std::holds_alternative<MultiPoly>(v.residual))
      out["residual"] = print_poly_univariate(std::get<MultiPoly>(v.residual), "z2");
    if (!as_json) {
      if (ps.exact_empty) {
        std::cout << "EXACT EMPTY (residual constant = "
                  << rational_to_string(v.empty_constant.value_or(Rational(0))) << ")\n";
      } else {
        std::cout << "verdict: " << verdict_kind_name(v.kind) << " (exact)\n";
        if (std::holds_alternative<MultiPoly>(v.residual))
          std::cout << "residual(z2) = "
                    << print_poly_univariate(std::get<MultiPoly>(v.residual), "z2") << "\n";
      }
    }
  } else {
    const std::vector<Complex> w = parse_complex_point(point);
    ps = preimage(b, w, tol);
    out["exact"] = false;
    out["verdict"] = ps.witnesses.empty() ? "empty (numeric)" : "finite (numeric)";
    if (!as_json)
      std::cout << "verdict is numeric, not exact (complex target): "
                << (ps.witnesses.empty() ? "no witnesses found" : "witnesses found") << "\n";
  }
  out["exact_empty"] = ps.exact_empty;
  Json wits = Json::array();
  for (size_t i = 0; i < ps.witnesses.size(); ++i) {
    Json wj = Json::array();
    for (const Complex& c : ps.witnesses[i]) wj.push_back(Json{{"re", c.real()}, {"im", c.imag()}});
    wits.push_back(Json{{"point", wj}, {"residual", ps.residuals[i]}});
  }
  out["witnesses"] = std::move(wits);
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else if (!ps.exact_empty) {
    std::cout << "witnesses (" << ps.witnesses.size() << ", tol " << tol << "):\n";
    for (size_t i = 0; i < ps.witnesses.size(); ++i)
      std::cout << "  " << format_point(ps.witnesses[i]) << "  |f(z)-w| = " << ps.residuals[i]
                << "\n";
  }
  return 0;
}

int run_verify(const std::string& bundle_path, long samples, uint64_t seed, long grid, double tol,
               const std::string& probes_path, const std::string& out_path, bool as_json) {
  const ConstructionBundle b = load_bundle(bundle_path);
  std::vector<std::vector<Rational>> probes;
  if (!probes_path.empty()) {
    const Json pj = load_json_file(probes_path);
    probes = points_from_json(pj.contains("points") ? pj["points"] : pj);
  } else if (!b.complement_points.empty()) {
    probes = b.complement_points;
  }
  const AuditReport rep =
      run_full_audit(b, samples, seed, grid, tol, probes.empty() ? nullptr : &probes);
  if (!out_path.empty()) write_json_file(out_path, to_json(rep));
  print_report(rep, as_json);
  return rep.pass() ? 0 : 1;
}

int run_degree(const std::string& bundle_path, bool as_json) {
  const ConstructionBundle b = load_bundle(bundle_path);
  const AuditReport rep = audit_degree(b);
  if (as_json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "degree = " << rep.degree_observed << ", bound = " << rep.degree_bound << ": "
              << (rep.pass() ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass() ? 0 : 1;
}

std::vector<std::vector<Rational>> nodal_cubic_probes() {
  std::vector<std::vector<Rational>> probes;
  for (long x : {1L, -1L})
    for (long t = -3; t <= 3; ++t) {
      const auto wpt = nodal_cubic_point(Rational(t));
      probes.push_back({Rational(x), Rational(0), wpt[0], wpt[1]});
    }
  return probes;
}

int demo_example22(bool as_json) {
  ZSpec s;
  s.n = 4;
  s.points = {{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}};
  s.w_polys = {parse_poly("z3^2 - z4^3 - z4^2", 4)};
  const ConstructionBundle b = build_theorem_map(s);
  if (!as_json) print_bundle(b);
  const auto probes = nodal_cubic_probes();
  const AuditReport rep = run_full_audit(b, 200, 42, 10, 1e-8, &probes);
  print_report(rep, as_json);
  return rep.pass() ? 0 : 1;
}

int demo_many_points(int n, int d, bool as_json) {
  const ConstructionBundle b = build_many_points_example(n, d);
  if (!as_json) print_bundle(b);
  const AuditReport rep = run_full_audit(b, 100, 42, 10, 1e-8, &b.complement_points);
  print_report(rep, as_json);
  return rep.pass() ? 0 : 1;
}

int demo_jelonek(bool as_json) {
  const AuditReport rep = jelonek_fixture(200, 42, 10, 1e-8);
  if (!as_json)
    std::cout << "f = (z1^2*z2 + z1 - z2, z1*z2)   avoids exactly (0,-1)\n";
  print_report(rep, as_json);
  return rep.pass() ? 0 : 1;
}

int demo_punctured(int n, bool as_json) {
  ZSpec s;
  s.n = n;
  s.points = {std::vector<Rational>(n, Rational(0))};
  const ConstructionBundle b = build_sigma(s);
  if (!as_json) print_bundle(b);
  const std::vector<std::vector<Rational>> probes{std::vector<Rational>(n, Rational(0))};
  const AuditReport rep = run_full_audit(b, 500, 42, 10, 1e-8, &probes);
  print_report(rep, as_json);
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surjective endomorphisms of affine space with prescribed complement"};
  app.require_subcommand(1);
  int exit_code = 0;

  auto* construct = app.add_subcommand("construct", "build a map bundle from a spec file");
  std::string spec_path, family = "theorem", out_path;
  bool construct_json = false;
  construct->add_option("--spec", spec_path, "spec JSON file")->required();
  construct->add_option("--family", family, "theorem|sigma|many-points");
  construct->add_option("--out", out_path, "bundle output path");
  construct->add_flag("--json", construct_json, "print the bundle JSON to stdout");
  construct->callback(
      [&] { exit_code = run_construct(spec_path, family, out_path, construct_json); });

  auto* preimage_cmd = app.add_subcommand("preimage", "solve f(z) = w for a target point");
  std::string bundle_path, point;
  double tol = 1e-8;
  bool preimage_json = false;
  preimage_cmd->add_option("--bundle", bundle_path, "bundle JSON file")->required();
  preimage_cmd->add_option("--point", point, "comma-separated coordinates; a+bi for complex")
      ->required();
  preimage_cmd->add_option("--tol", tol, "witness residual tolerance");
  preimage_cmd->add_flag("--json", preimage_json, "JSON output");
  preimage_cmd->callback([&] { exit_code = run_preimage(bundle_path, point, tol, preimage_json); });

  auto* verify = app.add_subcommand("verify", "degree + z-avoidance + surjectivity audit");
  std::string v_bundle, v_probes, v_out;
  long samples = 200, grid = 10;
  uint64_t seed = 42;
  double v_tol = 1e-8;
  bool verify_json = false;
  verify->add_option("--bundle", v_bundle, "bundle JSON file")->required();
  verify->add_option("--samples", samples, "number of grid samples");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--grid", grid, "grid bound B: coordinates in [-B,B]");
  verify->add_option("--tol", v_tol, "witness residual tolerance");
  verify->add_option("--z-probes", v_probes, "JSON file with in-Z probe points");
  verify->add_option("--out", v_out, "write report JSON here");
  verify->add_flag("--json", verify_json, "JSON report on stdout");
  verify->callback([&] {
    exit_code = run_verify(v_bundle, samples, seed, grid, v_tol, v_probes, v_out, verify_json);
  });

  auto* degree = app.add_subcommand("degree", "recompute the degree and check the bound");
  std::string d_bundle;
  bool degree_json = false;
  degree->add_option("--bundle", d_bundle, "bundle JSON file")->required();
  degree->add_flag("--json", degree_json, "JSON output");
  degree->callback([&] { exit_code = run_degree(d_bundle, degree_json); });

  auto* demo = app.add_subcommand("demo", "run a built-in fixture end to end");
  demo->require_subcommand(1);
  bool demo_json = false;
  demo->add_flag("--json", demo_json, "JSON report on stdout");
  auto* ex22 = demo->add_subcommand("example-2-2", "two parallel nodal cubics in A^4");
  ex22->callback([&] { exit_code = demo_example22(demo_json); });
  auto* mp = demo->add_subcommand("many-points", "superexponential avoided-point grid");
  int mp_n = 3, mp_d = 4;
  mp->add_option("--n", mp_n, "dimension (> 2)");
  mp->add_option("--d", mp_d, "degree (>= n)");
  mp->callback([&] { exit_code = demo_many_points(mp_n, mp_d, demo_json); });
  auto* jel = demo->add_subcommand("jelonek", "the classical degree-3 plane map");
  jel->callback([&] { exit_code = demo_jelonek(demo_json); });
  auto* punct = demo->add_subcommand("punctured", "degree-3 map onto A^n minus the origin");
  int punct_n = 4;
  punct->add_option("--n", punct_n, "dimension (>= 2)");
  punct->callback([&] { exit_code = demo_punctured(punct_n, demo_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
