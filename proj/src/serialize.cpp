#include "asurj/serialize.hpp"

#include <fstream>

#include "asurj/parse.hpp"

namespace asurj {

namespace {

void require_format(const Json& j, const char* what) {
  if (!j.is_object() || !j.contains("format") || j["format"] != 1)
    throw std::invalid_argument(std::string(what) + ": missing or unsupported \"format\" (expected 1)");
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational as a \"p/q\" string");
  return rational_from_string(j.get<std::string>());
}

Json rationals_to_json(std::span<const Rational> xs) {
  Json a = Json::array();
  for (const Rational& x : xs) a.push_back(rational_to_string(x));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const Json& x : j) out.push_back(rational_from_json(x));
  return out;
}

const char* family_key(Family f) { return family_name(f); }

}  // namespace

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json::array({Json(e), rational_to_string(c)}));
  return Json{{"num_vars", p.num_vars()}, {"terms", std::move(terms)}};
}

MultiPoly multipoly_from_json(const Json& j) {
  MultiPoly p(j.at("num_vars").get<int>());
  for (const Json& t : j.at("terms")) {
    const Exponents e = t.at(0).get<Exponents>();
    for (int v : e)
      if (v < 0) throw std::invalid_argument("polynomial term with negative exponent");
    p.add_term(e, rational_from_json(t.at(1)));
  }
  return p;
}

Json to_json(const PolyMap& f) {
  Json comps = Json::array();
  for (const MultiPoly& c : f.components()) comps.push_back(to_json(c));
  return Json{{"num_vars", f.num_vars()}, {"components", std::move(comps)}};
}

PolyMap polymap_from_json(const Json& j) {
  std::vector<MultiPoly> comps;
  for (const Json& c : j.at("components")) comps.push_back(multipoly_from_json(c));
  PolyMap f(std::move(comps));
  if (j.contains("num_vars") && j["num_vars"].get<int>() != f.num_vars())
    throw std::invalid_argument("polynomial map with inconsistent num_vars");
  return f;
}

Json to_json(const TriangularAuto& a) {
  return Json{{"kind", auto_kind_name(a.kind)},
              {"forward", to_json(a.forward)},
              {"inverse", to_json(a.inverse)}};
}

TriangularAuto triauto_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  AutoKind k;
  if (kind == "affine-2d")
    k = AutoKind::Affine2d;
  else if (kind == "shear-nd")
    k = AutoKind::ShearNd;
  else if (kind == "lagrange-shift")
    k = AutoKind::LagrangeShift;
  else
    throw std::invalid_argument("unknown automorphism kind: '" + kind + "'");
  TriangularAuto a{k, polymap_from_json(j.at("forward")), polymap_from_json(j.at("inverse"))};
  const PolyMap id = PolyMap::identity(a.forward.num_vars());
  if (compose(a.forward, a.inverse) != id || compose(a.inverse, a.forward) != id)
    throw std::invalid_argument("automorphism in file is not invertible as recorded");
  return a;
}

Json points_to_json(const std::vector<std::vector<Rational>>& points) {
  Json a = Json::array();
  for (const auto& p : points) a.push_back(rationals_to_json(p));
  return a;
}

std::vector<std::vector<Rational>> points_from_json(const Json& j) {
  std::vector<std::vector<Rational>> out;
  for (const Json& p : j) out.push_back(rationals_from_json(p));
  return out;
}

Json to_json(const ZSpec& spec) {
  Json w = Json::array();
  for (const MultiPoly& q : spec.w_polys) w.push_back(print_poly(q));
  return Json{{"format", 1},
              {"n", spec.n},
              {"points", points_to_json(spec.points)},
              {"w_polys", std::move(w)}};
}

ZSpec zspec_from_json(const Json& j) {
  require_format(j, "zspec");
  ZSpec spec;
  spec.n = j.at("n").get<int>();
  if (j.contains("points")) spec.points = points_from_json(j["points"]);
  if (j.contains("w_polys")) {
    for (const Json& q : j["w_polys"]) {
      if (q.is_string())
        spec.w_polys.push_back(parse_poly(q.get<std::string>(), spec.n));
      else
        spec.w_polys.push_back(multipoly_from_json(q));
    }
  }
  return spec;
}

Json to_json(const ConstructionBundle& b) {
  Json autos = Json::array();
  for (const TriangularAuto& a : b.post_autos) autos.push_back(to_json(a));
  Json j{{"format", 1},
         {"family", family_key(b.family)},
         {"n", b.n},
         {"degree", b.degree},
         {"degree_bound", b.degree_bound},
         {"betas", rationals_to_json(b.betas)},
         {"r_poly", to_json(b.r_poly)},
         {"core_map", to_json(b.core_map)},
         {"post_autos", std::move(autos)},
         {"full_map", to_json(b.full_map)},
         {"z_normalized", to_json(b.z_normalized)}};
  if (!b.complement_points.empty())
    j["complement_points"] = points_to_json(b.complement_points);
  return j;
}

ConstructionBundle bundle_from_json(const Json& j) {
  require_format(j, "bundle");
  std::vector<TriangularAuto> autos;
  for (const Json& a : j.at("post_autos")) autos.push_back(triauto_from_json(a));
  ConstructionBundle b{family_from_name(j.at("family").get<std::string>()),
                       j.at("n").get<int>(),
                       polymap_from_json(j.at("core_map")),
                       std::move(autos),
                       polymap_from_json(j.at("full_map")),
                       rationals_from_json(j.at("betas")),
                       multipoly_from_json(j.at("r_poly")),
                       zspec_from_json(j.at("z_normalized")),
                       j.at("degree").get<int>(),
                       j.at("degree_bound").get<int>(),
                       {}};
  if (j.contains("complement_points"))
    b.complement_points = points_from_json(j["complement_points"]);
  b.z_normalized.canonicalize();
  b.check_invariants();
  return b;
}

Json to_json(const AuditReport& r) {
  Json failures = Json::array();
  for (const AuditFailure& f : r.failures)
    failures.push_back(Json{{"check", f.check}, {"point", f.point}, {"detail", f.detail}});
  return Json{{"format", 1},
              {"bundle", r.bundle_summary},
              {"pass", r.pass()},
              {"degree_observed", r.degree_observed},
              {"degree_bound", r.degree_bound},
              {"samples_tested", r.samples_tested},
              {"samples_with_witness", r.samples_with_witness},
              {"samples_skipped", r.samples_skipped},
              {"z_probes_tested", r.z_probes_tested},
              {"z_probes_empty", r.z_probes_empty},
              {"seed", r.seed},
              {"failures", std::move(failures)}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace asurj
