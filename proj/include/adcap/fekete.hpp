#pragma once

#include "adcap/adelic.hpp"
#include "adcap/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace adcap {

// A positive rational kept as prod p^e.  Scaling exponents can reach the
// tens of thousands, so the plain rational is only materialized on demand.
class FactoredRational {
 public:
  FactoredRational() = default;

  void set_exponent(std::int64_t p, long long e);
  long long exponent_of(std::int64_t p) const;
  const std::map<std::int64_t, long long>& exponents() const { return exponents_; }

  bool is_one() const { return exponents_.empty(); }
  double log_value() const;
  Rational to_rational() const;  // may be astronomically large
  std::string to_string() const;

 private:
  std::map<std::int64_t, long long> exponents_;  // prime -> nonzero exponent
};

// Exact sign of p^e - q^n for a positive rational q.  The p-part of q is
// split off first, so pure p-power radii cost nothing and the remaining
// comparison cannot tie.
int prime_power_vs_rational_power(std::int64_t p, long long e, const Rational& q, long long n);

// The multiplier alpha^{1/n} of Lemma-style scaling: r(v) * |alpha|_v^{1/n}
// is >= 1 at every place (exactly, at finite places) and > 1 at the
// archimedean place.  Scaled finite radii are n-th roots for n > 1, hence
// irrational; the exact datum is the (alpha, n) pair and the doubles below
// are a display view.
struct WitnessScaling {
  RadiusAssignment base;  // the r that was scaled
  FactoredRational alpha;
  long long root_exponent = 1;  // the n of alpha^{1/n}

  explicit WitnessScaling(RadiusAssignment r) : base(std::move(r)) {}

  double scaled_archimedean() const;
  double scaled_finite(std::int64_t p) const;
  // Archimedean first, then primes ascending, over the joint support.
  std::vector<std::pair<Place, double>> scaled_view() const;
};

// A point of A^d with coordinates zeta * alpha^{-1/n}, zeta a root of
// unity given as e^(2*pi*i*index/order).  All Galois conjugates of every
// coordinate share the absolute value |alpha|_v^{-1/n} at each place.
struct WitnessPoint {
  struct Coordinate {
    long long order = 1;
    long long index = 0;
  };

  std::vector<Coordinate> coordinates;
  FactoredRational alpha;
  long long root_exponent = 1;
};

// Finds (alpha, n) with n minimal in the search order: for n = 1, 2, ...
// each finite support place absorbs the largest exponent keeping its scaled
// radius >= 1 (exact comparison), and n is accepted once the archimedean
// scaled radius clears 1 by a 1e-12 log margin.
// Throws NotSupercritical when ln|r| <= 1e-9 and SearchExhausted past n = 10^4.
WitnessScaling find_scaling(const RadiusAssignment& r);

// Do all conjugates of the point lie in B(r)?  Exact at finite places,
// 1e-12 log tolerance at the archimedean place.
bool verify_point(const WitnessPoint& point, const RadiusAssignment& r);

// count points with pairwise distinct coordinate tuples: the k-th point
// uses order-k roots of unity in every coordinate.
std::vector<WitnessPoint> enumerate_witnesses(const WitnessScaling& scaling, int count);

}  // namespace adcap
