#include "adcap/capacity.hpp"

#include "adcap/errors.hpp"

#include <cmath>

namespace adcap {

MorphismDescriptor::MorphismDescriptor(int dim, long long deg, long long mult,
                                       std::optional<double> div_deg)
    : d(dim), degree(deg), multiplicity(mult), divisor_degree(div_deg) {
  if (d < 1) throw Error(ErrorCode::DomainError, "fiber dimension must be positive");
  if (degree < 1) throw Error(ErrorCode::DomainError, "morphism degree must be positive");
  if (multiplicity < 1) throw Error(ErrorCode::DomainError, "multiplicity must be positive");
  if (divisor_degree) {
    if (!(*divisor_degree > 0.0)) {
      throw Error(ErrorCode::DomainError, "divisor degree must be positive");
    }
    if (d == 1) {
      // On curves m(f) |X'_1| = deg(f).
      double expected = static_cast<double>(degree);
      double got = static_cast<double>(multiplicity) * *divisor_degree;
      if (std::abs(got - expected) > 1e-9 * expected) {
        throw Error(ErrorCode::DomainError,
                    "multiplicity * divisor_degree != degree on a curve");
      }
    }
  }
}

PullbackCandidate::PullbackCandidate(MorphismDescriptor m, RadiusAssignment r)
    : morphism(m), radii(std::move(r)) {
  if (radii.dimension() != morphism.d) {
    throw Error(ErrorCode::DimensionMismatch, "radius dimension differs from morphism dimension");
  }
}

double polydisk_log_capacity(int d, const RadiusAssignment& radii) {
  if (d < 1) throw Error(ErrorCode::DomainError, "dimension must be positive");
  if (radii.dimension() != d) {
    throw Error(ErrorCode::DimensionMismatch, "radius dimension differs from polydisk dimension");
  }
  return static_cast<double>(d) * radii.log_norm();
}

double polydisk_sectional_capacity(int d, const RadiusAssignment& radii) {
  return std::exp(polydisk_log_capacity(d, radii));
}

double pullback_log_capacity(const PullbackCandidate& candidate) {
  const auto& m = candidate.morphism;
  double exponent = static_cast<double>(m.d) * static_cast<double>(m.degree) /
                    std::pow(static_cast<double>(m.multiplicity), m.d + 1);
  return exponent * candidate.radii.log_norm();
}

double pullback_sectional_capacity(const PullbackCandidate& candidate) {
  return std::exp(pullback_log_capacity(candidate));
}

double finite_morphism_capacity_lower_bound(
    const std::vector<PullbackCandidate>& candidates,
    const std::function<bool(const PullbackCandidate&)>& contained) {
  bool any = false;
  double best_log = 0.0;
  for (const auto& candidate : candidates) {
    if (!contained(candidate)) continue;
    double log_value = pullback_log_capacity(candidate);
    if (!any || log_value > best_log) best_log = log_value;
    any = true;
  }
  return any ? std::exp(best_log) : 0.0;
}

double adjusted_exponent(int d, double divisor_degree) {
  if (d < 1) throw Error(ErrorCode::DomainError, "dimension must be positive");
  if (!(divisor_degree > 0.0)) {
    throw Error(ErrorCode::DomainError, "divisor degree must be positive");
  }
  return std::pow(divisor_degree, -static_cast<double>(d + 1) / d);
}

CurveIdentityResult curve_pullback_identity_check(long long degree, long long multiplicity,
                                                  const RadiusAssignment& radii) {
  if (degree < 1 || multiplicity < 1) {
    throw Error(ErrorCode::DomainError, "degree and multiplicity must be positive");
  }
  if (degree % multiplicity != 0) {
    throw Error(ErrorCode::DomainError, "multiplicity does not divide degree");
  }
  double divisor_degree = static_cast<double>(degree / multiplicity);
  PullbackCandidate candidate(MorphismDescriptor(1, degree, multiplicity, divisor_degree),
                              radii);
  CurveIdentityResult result;
  double lhs_log = adjusted_exponent(1, divisor_degree) * pullback_log_capacity(candidate);
  double rhs_log = radii.log_norm() / static_cast<double>(degree);
  result.lhs = std::exp(lhs_log);
  result.rhs = std::exp(rhs_log);
  result.pass = std::abs(result.lhs - result.rhs) <= 1e-12 * std::abs(result.rhs);
  return result;
}

bool theorem_compare_check(double fm_lower_bound, double sectional) {
  if (fm_lower_bound < 0.0) throw Error(ErrorCode::DomainError, "negative lower bound");
  if (!(sectional > 0.0)) throw Error(ErrorCode::DomainError, "sectional capacity must be positive");
  return fm_lower_bound <= sectional * (1.0 + 1e-12);
}

}  // namespace adcap
