#pragma once

#include "adcap/adelic.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace adcap {

// (d, deg pi, m(pi)) for a finite morphism pi: X -> P^d pulling the
// hyperplane at infinity back to m(pi) * X_1, plus the optional d-fold
// self-intersection number |X'_1| of the boundary divisor.
struct MorphismDescriptor {
  int d = 1;
  long long degree = 1;
  long long multiplicity = 1;
  std::optional<double> divisor_degree;

  MorphismDescriptor() = default;
  MorphismDescriptor(int dim, long long deg, long long mult,
                     std::optional<double> div_deg = std::nullopt);
};

// A (pi, r) pair ranged over in the finite-morphism-capacity supremum.
struct PullbackCandidate {
  MorphismDescriptor morphism;
  RadiusAssignment radii;

  PullbackCandidate(MorphismDescriptor m, RadiusAssignment r);
};

// S_gamma(B(r), H) = |r|^d on P^d.  Log-space throughout.
double polydisk_sectional_capacity(int d, const RadiusAssignment& radii);
double polydisk_log_capacity(int d, const RadiusAssignment& radii);

// S_gamma(pi^{-1}(B(r)), X_1) = |r|^{d deg(pi) / m(pi)^{d+1}}.
double pullback_sectional_capacity(const PullbackCandidate& candidate);
double pullback_log_capacity(const PullbackCandidate& candidate);

// sup over the certified candidates of the pullback capacity; 0 when no
// candidate is certified.  Containment pi^{-1}(B(r)) in U is the caller's
// assertion, never inferred here.
double finite_morphism_capacity_lower_bound(
    const std::vector<PullbackCandidate>& candidates,
    const std::function<bool(const PullbackCandidate&)>& contained);

// |X'_1|^{-(d+1)/d}, the normalization exponent of the support capacities.
double adjusted_exponent(int d, double divisor_degree);

struct CurveIdentityResult {
  double lhs = 0.0;  // (|r|^{deg/m^2})^{|X'_1|^{-2}}
  double rhs = 0.0;  // |r|^{1/deg}
  bool pass = false;
};

// The curve pullback identity: both routes must agree to 1e-12 relative.
// Requires multiplicity | degree so that |X'_1| = degree/multiplicity.
CurveIdentityResult curve_pullback_identity_check(long long degree, long long multiplicity,
                                                  const RadiusAssignment& radii);

// gamma_F(E, X_1) <= S^+_gamma(E, X_1), up to 1e-12 relative slack.
bool theorem_compare_check(double fm_lower_bound, double sectional);

}  // namespace adcap
