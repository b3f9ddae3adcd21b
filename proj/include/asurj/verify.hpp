#pragma once

#include <cstdint>
#include <string>

#include "asurj/solver.hpp"

namespace asurj {

struct AuditFailure {
  std::string check;               // which audit recorded it
  std::vector<std::string> point;  // offending target, exact strings
  std::string detail;              // e.g. the full residual polynomial
};

// Machine-readable audit result. Reports are deterministic given the bundle,
// seed and parameters; elapsed_seconds is for the human summary only and is
// excluded from the serialized form so reruns are byte-identical.
struct AuditReport {
  std::string bundle_summary;
  int degree_observed = 0;
  int degree_bound = 0;
  long samples_tested = 0;
  long samples_with_witness = 0;
  long samples_skipped = 0;  // exact Z-members drawn by the sampler
  long z_probes_tested = 0;
  long z_probes_empty = 0;
  std::vector<AuditFailure> failures;
  uint64_t seed = 0;
  double elapsed_seconds = 0.0;

  bool pass() const {
    return failures.empty() && samples_with_witness == samples_tested &&
           z_probes_empty == z_probes_tested && degree_observed <= degree_bound;
  }
  void merge(const AuditReport& other);
};

std::string bundle_summary(const ConstructionBundle& b);

// Recomputes the map degree symbolically and compares it to the family's
// bound; collinear sigma inputs and the many-points construction must attain
// their bounds exactly.
AuditReport audit_degree(const ConstructionBundle& b);

// Every probe must lie in Z (std::invalid_argument otherwise) and must
// classify Empty in exact arithmetic.
AuditReport audit_z_avoidance(const ConstructionBundle& b,
                              const std::vector<std::vector<Rational>>& probes);

// Draws `samples` rational points with coordinates uniform on the integer
// grid [-grid_bound, grid_bound] (deterministic stream per sample index),
// skips exact Z-members, and requires a verified preimage witness for each
// of the rest.
AuditReport audit_surjectivity(const ConstructionBundle& b, long samples,
                               uint64_t seed, long grid_bound, double tol = 1e-8);

// degree + optional z-avoidance + surjectivity, merged into one report.
AuditReport run_full_audit(const ConstructionBundle& b, long samples, uint64_t seed,
                           long grid_bound, double tol = 1e-8,
                           const std::vector<std::vector<Rational>>* z_probes = nullptr);

// Verification fixture: the classical degree-3 plane map
// (z1(z1 z2 + 1) - z2, z1 z2) avoiding exactly (0,-1). Reduction to
// (w2+1) t^2 - w1 t - w2 = 0 in t = z1; (0,-1) classifies exact Empty, every
// other grid target must produce a verified witness, degree is 3.
AuditReport jelonek_fixture(long samples = 200, uint64_t seed = 42,
                            long grid_bound = 10, double tol = 1e-8);

// (t^3 - t, t^2 - 1): exact rational points of the nodal cubic
// w3^2 = w4^3 + w4^2, used to generate W-probes in tests and demos.
std::vector<Rational> nodal_cubic_point(const Rational& t);

}  // namespace asurj
