#pragma once

#include "adcap/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace adcap {

// A place of Q: the archimedean place or a finite prime p.
// Ordering is archimedean first, then primes ascending; serialization
// depends on it.
class Place {
 public:
  static Place archimedean() { return Place(0); }
  static Place finite(std::int64_t p);  // DomainError unless p is prime

  bool is_archimedean() const { return prime_ == 0; }
  std::int64_t prime() const;  // finite places only

  std::string to_string() const;       // "inf" or the decimal prime
  static Place parse(const std::string& text);

  friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
  friend bool operator!=(const Place& a, const Place& b) { return a.prime_ != b.prime_; }
  friend bool operator<(const Place& a, const Place& b) { return a.prime_ < b.prime_; }

 private:
  explicit Place(std::int64_t p) : prime_(p) {}
  std::int64_t prime_;  // 0 encodes the archimedean place
};

// The normalized absolute value |q|_v of a nonzero rational.  The result is
// an exact rational at every place: |q|_p = p^(-ord_p(q)) and the usual |q|
// at the archimedean place.
Rational absolute_value(const Rational& q, const Place& v);

// prod_v |q|_v over the archimedean place and every prime dividing the
// numerator or denominator; equals 1 exactly for every nonzero rational.
Rational product_formula_check(const Rational& q);

// A finitely supported radius function r: places -> R_{>0}, value 1 off
// support.  The archimedean radius is a double; finite-place radii are
// exact rationals.  Also carries the ambient dimension d of the polydisk
// B(r) it describes.
class RadiusAssignment {
 public:
  explicit RadiusAssignment(int dimension);

  int dimension() const { return dimension_; }

  void set_archimedean(double value);                   // DomainError unless > 0
  void set_finite(std::int64_t p, const Rational& value);  // DomainError unless > 0

  double archimedean() const { return archimedean_; }
  // Finite support only; entries equal to 1 are normalized away.
  const std::map<std::int64_t, Rational>& finite_support() const { return finite_; }

  Rational finite_value(std::int64_t p) const;  // 1 off support

  double norm() const;      // |r| = prod_v r(v)
  double log_norm() const;  // ln|r|, safe against over/underflow

  // Pointwise product; dimensions must agree.
  RadiusAssignment pointwise_product(const RadiusAssignment& other) const;

 private:
  int dimension_;
  double archimedean_ = 1.0;
  std::map<std::int64_t, Rational> finite_;
};

double radius_norm(const RadiusAssignment& r);

}  // namespace adcap
