#include "adcap/adelic.hpp"

#include "adcap/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace adcap {

namespace mp = boost::multiprecision;

Place Place::finite(std::int64_t p) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::DomainError, "not a prime: " + std::to_string(p));
  }
  return Place(p);
}

std::int64_t Place::prime() const {
  if (is_archimedean()) throw Error(ErrorCode::DomainError, "archimedean place has no prime");
  return prime_;
}

std::string Place::to_string() const {
  return is_archimedean() ? "inf" : std::to_string(prime_);
}

Place Place::parse(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "infinity") return archimedean();
  char* end = nullptr;
  long long p = std::strtoll(text.c_str(), &end, 10);
  if (end == nullptr || *end != '\0') {
    throw Error(ErrorCode::SchemaError, "bad place \"" + text + "\" (expected \"inf\" or a prime)");
  }
  return finite(p);
}

Rational absolute_value(const Rational& q, const Place& v) {
  if (q == 0) throw Error(ErrorCode::DomainError, "absolute value of zero");
  if (v.is_archimedean()) return q < 0 ? Rational(-q) : q;
  long long ord = ord_at_prime(mp::numerator(q), v.prime()) -
                  ord_at_prime(mp::denominator(q), v.prime());
  BigInt power = int_pow(BigInt(v.prime()), static_cast<unsigned long long>(std::llabs(ord)));
  return ord >= 0 ? Rational(1, power) : Rational(power);
}

namespace {

void collect_prime_factors(BigInt n, std::vector<std::int64_t>* primes) {
  n = mp::abs(n);
  for (std::int64_t p = 2; BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      primes->push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes->push_back(n.convert_to<std::int64_t>());
}

}  // namespace

Rational product_formula_check(const Rational& q) {
  if (q == 0) throw Error(ErrorCode::DomainError, "product formula over zero");
  std::vector<std::int64_t> primes;
  collect_prime_factors(mp::numerator(q), &primes);
  collect_prime_factors(mp::denominator(q), &primes);
  Rational product = absolute_value(q, Place::archimedean());
  for (std::int64_t p : primes) product *= absolute_value(q, Place::finite(p));
  return product;
}

RadiusAssignment::RadiusAssignment(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw Error(ErrorCode::DomainError, "dimension must be positive");
}

void RadiusAssignment::set_archimedean(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorCode::DomainError, "radius must be a positive finite real");
  }
  archimedean_ = value;
}

void RadiusAssignment::set_finite(std::int64_t p, const Rational& value) {
  Place place = Place::finite(p);  // validates primality
  if (value <= 0) throw Error(ErrorCode::DomainError, "radius must be positive");
  if (value == 1) {
    finite_.erase(place.prime());
  } else {
    finite_[place.prime()] = value;
  }
}

Rational RadiusAssignment::finite_value(std::int64_t p) const {
  auto it = finite_.find(p);
  return it == finite_.end() ? Rational(1) : it->second;
}

double RadiusAssignment::norm() const {
  Rational finite_part(1);
  for (const auto& [p, value] : finite_) finite_part *= value;
  return archimedean_ * to_double(finite_part);
}

double RadiusAssignment::log_norm() const {
  double sum = std::log(archimedean_);
  for (const auto& [p, value] : finite_) sum += log_rational(value);
  return sum;
}

RadiusAssignment RadiusAssignment::pointwise_product(const RadiusAssignment& other) const {
  if (dimension_ != other.dimension_) {
    throw Error(ErrorCode::DimensionMismatch, "radius assignments of different dimension");
  }
  RadiusAssignment result(dimension_);
  result.set_archimedean(archimedean_ * other.archimedean_);
  for (const auto& [p, value] : finite_) result.set_finite(p, value * other.finite_value(p));
  for (const auto& [p, value] : other.finite_) {
    if (finite_.find(p) == finite_.end()) result.set_finite(p, value);
  }
  return result;
}

double radius_norm(const RadiusAssignment& r) { return r.norm(); }

}  // namespace adcap
