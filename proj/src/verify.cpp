#include "asurj/verify.hpp"

#include <chrono>
#include <sstream>

#include "asurj/parse.hpp"
#include "asurj/rng.hpp"

namespace asurj {

namespace {

std::vector<std::string> point_strings(std::span<const Rational> w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const Rational& x : w) out.push_back(rational_to_string(x));
  return out;
}

std::string residual_text(const SolvabilityVerdict& v) {
  if (std::holds_alternative<MultiPoly>(v.residual))
    return print_poly_univariate(std::get<MultiPoly>(v.residual), "z2");
  const UniPolyC& p = std::get<UniPolyC>(v.residual);
  std::ostringstream os;
  os << "numeric residual, coefficients ascending: [";
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) os << ", ";
    os << format_complex(p.coeffs()[k]);
  }
  os << "]";
  return os.str();
}

}  // namespace

void AuditReport::merge(const AuditReport& other) {
  if (bundle_summary.empty()) bundle_summary = other.bundle_summary;
  degree_observed = std::max(degree_observed, other.degree_observed);
  degree_bound = std::max(degree_bound, other.degree_bound);
  samples_tested += other.samples_tested;
  samples_with_witness += other.samples_with_witness;
  samples_skipped += other.samples_skipped;
  z_probes_tested += other.z_probes_tested;
  z_probes_empty += other.z_probes_empty;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  if (seed == 0) seed = other.seed;
  elapsed_seconds += other.elapsed_seconds;
}

std::string bundle_summary(const ConstructionBundle& b) {
  std::ostringstream os;
  os << "family=" << family_name(b.family) << " n=" << b.n << " l=" << b.betas.size()
     << " m=" << b.z_normalized.w_polys.size() << " degree=" << b.degree
     << " bound=" << b.degree_bound;
  return os.str();
}

AuditReport audit_degree(const ConstructionBundle& b) {
  AuditReport rep;
  rep.bundle_summary = bundle_summary(b);
  rep.degree_observed = b.full_map.degree().value_or(0);
  rep.degree_bound = b.degree_bound;
  if (rep.degree_observed > rep.degree_bound)
    rep.failures.push_back({"degree", {}, "map degree exceeds the family bound"});
  const int l = static_cast<int>(b.betas.size());
  if (b.family == Family::PropSigma && points_collinear(b.z_normalized.points) &&
      rep.degree_observed != l + 2)
    rep.failures.push_back({"degree", {}, "collinear point set must give degree exactly l+2"});
  if (b.family == Family::ExampleManyPoints && rep.degree_observed != rep.degree_bound)
    rep.failures.push_back({"degree", {}, "many-points construction must have degree exactly d"});
  return rep;
}

AuditReport audit_z_avoidance(const ConstructionBundle& b,
                              const std::vector<std::vector<Rational>>& probes) {
  AuditReport rep;
  rep.bundle_summary = bundle_summary(b);
  for (const auto& probe : probes) {
    if (!membership_in_Z(b, probe))
      throw std::invalid_argument("audit_z_avoidance: probe not in Z: " + format_point(probe));
    ++rep.z_probes_tested;
    const SolvabilityVerdict v = classify_exact(b, probe);
    if (v.kind == VerdictKind::Empty && v.exact) {
      ++rep.z_probes_empty;
    } else {
      rep.failures.push_back(
          {"z-avoidance", point_strings(probe),
           std::string("expected exact Empty, got ") + verdict_kind_name(v.kind) +
               ", residual = " + residual_text(v)});
    }
  }
  return rep;
}

AuditReport audit_surjectivity(const ConstructionBundle& b, long samples, uint64_t seed,
                               long grid_bound, double tol) {
  AuditReport rep;
  rep.bundle_summary = bundle_summary(b);
  rep.seed = seed;
  for (long k = 0; k < samples; ++k) {
    SplitMix64 g(mix_stream(seed, static_cast<uint64_t>(k)));
    std::vector<Rational> w(b.n);
    for (int i = 0; i < b.n; ++i) w[i] = Rational(static_cast<long>(g.range(-grid_bound, grid_bound)));
    if (membership_in_Z(b, w)) {
      ++rep.samples_skipped;
      continue;
    }
    ++rep.samples_tested;
    // failures are data: a sample that throws (root finder gave up, witness
    // evaluation overflowed) is recorded, never aborts the audit
    try {
      const PreimageSet ps = preimage(b, w, tol);
      if (!ps.witnesses.empty()) {
        ++rep.samples_with_witness;
      } else {
        const SolvabilityVerdict v = classify_exact(b, w);
        rep.failures.push_back(
            {"surjectivity", point_strings(w),
             std::string("no verified witness; classification ") + verdict_kind_name(v.kind) +
                 ", residual = " + residual_text(v)});
      }
    } catch (const std::exception& e) {
      rep.failures.push_back({"surjectivity", point_strings(w), e.what()});
    }
  }
  return rep;
}

AuditReport run_full_audit(const ConstructionBundle& b, long samples, uint64_t seed,
                           long grid_bound, double tol,
                           const std::vector<std::vector<Rational>>* z_probes) {
  const auto t0 = std::chrono::steady_clock::now();
  AuditReport rep = audit_degree(b);
  if (z_probes) rep.merge(audit_z_avoidance(b, *z_probes));
  rep.merge(audit_surjectivity(b, samples, seed, grid_bound, tol));
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<Rational> nodal_cubic_point(const Rational& t) {
  return {Rational(t * t * t - t), Rational(t * t - 1)};
}

namespace {

PolyMap jelonek_map() {
  const MultiPoly z1 = MultiPoly::variable(2, 1);
  const MultiPoly z2 = MultiPoly::variable(2, 2);
  const MultiPoly one = MultiPoly::constant(2, Rational(1));
  return PolyMap({z1 * (z1 * z2 + one) - z2, z1 * z2});
}

// solving z2 out of the second component turns the fiber over w into
// (w2+1) t^2 - w1 t - w2 = 0 with t = z1 and z2 = t(w2+1) - w1
MultiPoly jelonek_residual(const Rational& w1, const Rational& w2) {
  const MultiPoly t = MultiPoly::variable(1, 1);
  return (w2 + 1) * t.pow(2) - w1 * t - MultiPoly::constant(1, w2);
}

}  // namespace

AuditReport jelonek_fixture(long samples, uint64_t seed, long grid_bound, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const PolyMap f = jelonek_map();
  AuditReport rep;
  rep.bundle_summary = "jelonek plane fixture n=2";
  rep.seed = seed;
  rep.degree_observed = f.degree().value_or(0);
  rep.degree_bound = 3;
  if (rep.degree_observed != 3)
    rep.failures.push_back({"degree", {}, "jelonek map must have degree exactly 3"});

  // the single avoided point
  const std::vector<Rational> avoided{Rational(0), Rational(-1)};
  ++rep.z_probes_tested;
  const MultiPoly rho0 = jelonek_residual(avoided[0], avoided[1]);
  if (!rho0.is_zero() && rho0.total_degree() == 0 && rho0.constant_term() != 0) {
    ++rep.z_probes_empty;
  } else {
    rep.failures.push_back(
        {"z-avoidance", point_strings(avoided), "residual = " + print_poly(rho0)});
  }

  for (long k = 0; k < samples; ++k) {
    SplitMix64 g(mix_stream(seed, static_cast<uint64_t>(k)));
    std::vector<Rational> w{Rational(static_cast<long>(g.range(-grid_bound, grid_bound))),
                            Rational(static_cast<long>(g.range(-grid_bound, grid_bound)))};
    if (w == avoided) {
      ++rep.samples_skipped;
      continue;
    }
    ++rep.samples_tested;
    const MultiPoly rho = jelonek_residual(w[0], w[1]);
    bool found = false;
    if (rho.total_degree().value_or(0) >= 1) {
      std::vector<Complex> coeffs;
      for (const Rational& c : rho.univariate_coeffs(1)) coeffs.push_back(to_complex(c));
      const RootSet roots = find_all_roots(UniPolyC(std::move(coeffs)));
      const Complex w1 = to_complex(w[0]), w2 = to_complex(w[1]);
      for (const Complex& t : roots.roots) {
        const std::vector<Complex> z{t, t * (w2 + 1.0) - w1};
        const std::vector<Complex> fz = f.eval(std::span<const Complex>(z));
        const double res = std::max(std::abs(fz[0] - w1), std::abs(fz[1] - w2));
        if (res <= tol) {
          found = true;
          break;
        }
      }
    }
    if (found) {
      ++rep.samples_with_witness;
    } else {
      rep.failures.push_back(
          {"surjectivity", point_strings(w), "residual = " + print_poly(rho)});
    }
  }
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace asurj
