#include "adcap/fekete.hpp"
#include "adcap/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace adcap;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an adcap::Error");
  return ErrorCode::DomainError;
}

}  // namespace

TEST_CASE("exact prime-power comparisons") {
  CHECK(prime_power_vs_rational_power(2, 3, Rational(8), 1) == 0);
  CHECK(prime_power_vs_rational_power(2, 2, Rational(8), 1) < 0);
  CHECK(prime_power_vs_rational_power(2, 4, Rational(8), 1) > 0);
  // Pure p-power radii resolve without big-integer arithmetic.
  CHECK(prime_power_vs_rational_power(2, 3000, Rational(8), 1000) == 0);
  CHECK(prime_power_vs_rational_power(2, 2999, Rational(8), 1000) < 0);
  // Mixed radii: 3^5 vs (10/7)^9.
  CHECK(prime_power_vs_rational_power(3, 5, Rational(10, 7), 9) > 0);
  CHECK(prime_power_vs_rational_power(3, 2, Rational(10, 7), 9) < 0);
  CHECK(code_of([] { prime_power_vs_rational_power(2, 1, Rational(-1), 1); }) ==
        ErrorCode::DomainError);
}

TEST_CASE("scaling when no finite absorption is needed") {
  RadiusAssignment r(1);
  r.set_archimedean(3.0);
  WitnessScaling scaling = find_scaling(r);
  CHECK(scaling.alpha.is_one());
  CHECK(scaling.root_exponent == 1);
  CHECK(scaling.scaled_archimedean() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("scaling absorbs a finite place into alpha") {
  RadiusAssignment r(1);
  r.set_archimedean(0.5);
  r.set_finite(2, Rational(8));
  WitnessScaling scaling = find_scaling(r);
  CHECK(scaling.root_exponent == 1);
  CHECK(scaling.alpha.to_rational() == Rational(4));
  CHECK(scaling.scaled_archimedean() == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(scaling.scaled_finite(2) == doctest::Approx(2.0).epsilon(1e-13));
  // Exact certificate at the finite place: 2^2 < 8^1.
  CHECK(prime_power_vs_rational_power(2, scaling.alpha.exponent_of(2), Rational(8), 1) < 0);
}

TEST_CASE("subcritical radii are rejected") {
  RadiusAssignment ones(2);
  CHECK(code_of([&] { find_scaling(ones); }) == ErrorCode::NotSupercritical);
  RadiusAssignment margin(1);
  margin.set_archimedean(1.0 + 1e-10);  // inside the 1e-9 margin
  CHECK(code_of([&] { find_scaling(margin); }) == ErrorCode::NotSupercritical);
}

TEST_CASE("scaling that needs a root exponent above one") {
  RadiusAssignment r(1);
  r.set_archimedean(0.6);
  r.set_finite(2, Rational(2));
  // n = 1..3 leave the archimedean radius at 0.6*2^{(n-1)/n} <= 1; n = 4 works.
  WitnessScaling scaling = find_scaling(r);
  CHECK(scaling.root_exponent == 4);
  CHECK(scaling.alpha.exponent_of(2) == 3);
  CHECK(scaling.scaled_archimedean() == doctest::Approx(0.6 * std::pow(2.0, 0.75)).epsilon(1e-12));
  CHECK(scaling.scaled_archimedean() > 1.0);
  for (const WitnessPoint& point : enumerate_witnesses(scaling, 5)) {
    CHECK(verify_point(point, r));
  }
}

TEST_CASE("verify point examples") {
  // (1, ..., 1) against r(inf) = 3.
  RadiusAssignment r3(2);
  r3.set_archimedean(3.0);
  WitnessScaling trivial = find_scaling(r3);
  auto points = enumerate_witnesses(trivial, 1);
  REQUIRE(points.size() == 1);
  CHECK(points[0].coordinates.size() == 2);
  CHECK(points[0].coordinates[0].order == 1);
  CHECK(verify_point(points[0], r3));

  // zeta_5 / 4 against r = {inf: 1/2, 2: 8}: |.|_inf = 1/4, |.|_2 = 4.
  RadiusAssignment r(1);
  r.set_archimedean(0.5);
  r.set_finite(2, Rational(8));
  WitnessPoint zeta5;
  zeta5.coordinates = {{5, 1}};
  zeta5.alpha.set_exponent(2, 2);  // alpha = 4
  zeta5.root_exponent = 1;
  CHECK(verify_point(zeta5, r));

  // The point (2) = 1 * (1/2)^{-1} lies outside the unit disc at infinity.
  RadiusAssignment unit(1);
  unit.set_archimedean(1.0);
  WitnessPoint two;
  two.coordinates = {{1, 0}};
  two.alpha.set_exponent(2, -1);  // alpha = 1/2
  two.root_exponent = 1;
  CHECK_FALSE(verify_point(two, unit));
}

TEST_CASE("witness enumeration") {
  RadiusAssignment r(1);
  r.set_archimedean(2.0);
  WitnessScaling scaling = find_scaling(r);

  CHECK(enumerate_witnesses(scaling, 0).empty());

  auto points = enumerate_witnesses(scaling, 3);
  REQUIRE(points.size() == 3);
  CHECK(points[0].coordinates[0].order == 1);
  CHECK(points[1].coordinates[0].order == 2);
  CHECK(points[2].coordinates[0].order == 3);
  for (const auto& point : points) CHECK(verify_point(point, r));
}

TEST_CASE("exact p-power radii take the strict exponent") {
  RadiusAssignment r(1);
  r.set_archimedean(1.01);
  r.set_finite(2, Rational(1024));
  WitnessScaling scaling = find_scaling(r);
  CHECK(scaling.root_exponent == 1);
  CHECK(scaling.alpha.exponent_of(2) == 9);  // 2^9 < 1024, scaled radius 2
  CHECK(scaling.scaled_finite(2) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("factored rationals print compactly or factored") {
  FactoredRational four;
  four.set_exponent(2, 2);
  CHECK(four.to_string() == "4");
  FactoredRational half;
  half.set_exponent(2, -1);
  CHECK(half.to_string() == "1/2");
  FactoredRational huge;
  huge.set_exponent(2, 99999);
  CHECK(huge.to_string() == "2^99999");
  CHECK(FactoredRational().to_string() == "1");
}

TEST_CASE("random supercritical radii always scale within the cap") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long long> small(1, 1000);
  std::uniform_real_distribution<double> arch_log(std::log(1e-3), std::log(1e3));
  const int primes[] = {2, 3, 5, 7, 11, 13};
  int done = 0;
  while (done < 50) {
    RadiusAssignment r(1 + static_cast<int>(rng() % 3));
    int places = static_cast<int>(rng() % 7);
    for (int i = 0; i < places; ++i) {
      Rational value(small(rng), small(rng));
      if (value != 1) r.set_finite(primes[i], value);
    }
    r.set_archimedean(std::exp(arch_log(rng)));
    if (!(r.log_norm() > std::log1p(1e-6))) continue;
    ++done;

    WitnessScaling scaling = find_scaling(r);
    CHECK(scaling.root_exponent <= 10000);
    CHECK(scaling.scaled_archimedean() > 1.0);
    for (const auto& [p, value] : r.finite_support()) {
      CHECK(prime_power_vs_rational_power(p, scaling.alpha.exponent_of(p), value,
                                          scaling.root_exponent) <= 0);
    }
    for (const auto& point : enumerate_witnesses(scaling, 10)) {
      CHECK(verify_point(point, r));
    }
  }
}
