#include "adcap/fekete.hpp"

#include "adcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace adcap {

namespace mp = boost::multiprecision;

void FactoredRational::set_exponent(std::int64_t p, long long e) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::DomainError, "not a prime: " + std::to_string(p));
  }
  if (e == 0) {
    exponents_.erase(p);
  } else {
    exponents_[p] = e;
  }
}

long long FactoredRational::exponent_of(std::int64_t p) const {
  auto it = exponents_.find(p);
  return it == exponents_.end() ? 0 : it->second;
}

double FactoredRational::log_value() const {
  double sum = 0.0;
  for (const auto& [p, e] : exponents_) {
    sum += static_cast<double>(e) * std::log(static_cast<double>(p));
  }
  return sum;
}

Rational FactoredRational::to_rational() const {
  BigInt num(1), den(1);
  for (const auto& [p, e] : exponents_) {
    if (e > 0) {
      num *= int_pow(BigInt(p), static_cast<unsigned long long>(e));
    } else {
      den *= int_pow(BigInt(p), static_cast<unsigned long long>(-e));
    }
  }
  return Rational(num, den);
}

std::string FactoredRational::to_string() const {
  if (exponents_.empty()) return "1";
  double digits = 0.0;
  for (const auto& [p, e] : exponents_) {
    digits += std::abs(static_cast<double>(e)) * std::log10(static_cast<double>(p));
  }
  if (digits <= 24.0) return rational_to_string(to_rational());
  std::string out;
  for (const auto& [p, e] : exponents_) {
    if (!out.empty()) out += "*";
    out += std::to_string(p) + "^" + std::to_string(e);
  }
  return out;
}

namespace {

// q = p^a * (u/v) with p dividing neither u nor v.
struct PFreePart {
  long long a = 0;
  BigInt u{1};
  BigInt v{1};
};

PFreePart split_p_part(std::int64_t p, const Rational& q) {
  PFreePart part;
  part.u = mp::numerator(q);
  part.v = mp::denominator(q);
  BigInt prime(p);
  while (part.u % prime == 0) {
    part.u /= prime;
    ++part.a;
  }
  while (part.v % prime == 0) {
    part.v /= prime;
    --part.a;
  }
  return part;
}

// Exact sign of p^g - w^n for the p-free rational w = u/v.  Since w^n is
// never a p-power unless w = 1, this cannot tie when w != 1.
int pow_vs_pfree_power(std::int64_t p, long long g, const BigInt& u, const BigInt& v,
                       long long n) {
  if (u == 1 && v == 1) return g > 0 ? 1 : (g == 0 ? 0 : -1);
  BigInt un = int_pow(u, static_cast<unsigned long long>(n));
  BigInt vn = int_pow(v, static_cast<unsigned long long>(n));
  BigInt lhs, rhs;
  if (g >= 0) {
    lhs = int_pow(BigInt(p), static_cast<unsigned long long>(g)) * vn;
    rhs = un;
  } else {
    lhs = vn;
    rhs = int_pow(BigInt(p), static_cast<unsigned long long>(-g)) * un;
  }
  return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
}

}  // namespace

int prime_power_vs_rational_power(std::int64_t p, long long e, const Rational& q, long long n) {
  if (q <= 0) throw Error(ErrorCode::DomainError, "rational must be positive");
  if (n < 1) throw Error(ErrorCode::DomainError, "power must be positive");
  PFreePart part = split_p_part(p, q);
  return pow_vs_pfree_power(p, e - part.a * n, part.u, part.v, n);
}

double WitnessScaling::scaled_archimedean() const {
  return std::exp(std::log(base.archimedean()) +
                  alpha.log_value() / static_cast<double>(root_exponent));
}

double WitnessScaling::scaled_finite(std::int64_t p) const {
  double log_r = log_rational(base.finite_value(p));
  double log_abs = -static_cast<double>(alpha.exponent_of(p)) * std::log(static_cast<double>(p));
  return std::exp(log_r + log_abs / static_cast<double>(root_exponent));
}

std::vector<std::pair<Place, double>> WitnessScaling::scaled_view() const {
  std::vector<std::pair<Place, double>> view;
  view.emplace_back(Place::archimedean(), scaled_archimedean());
  std::vector<std::int64_t> primes;
  for (const auto& [p, value] : base.finite_support()) primes.push_back(p);
  for (const auto& [p, e] : alpha.exponents()) {
    if (base.finite_support().find(p) == base.finite_support().end()) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  for (std::int64_t p : primes) view.emplace_back(Place::finite(p), scaled_finite(p));
  return view;
}

namespace {

// Per-place search state: theta = log_p(w) for the p-free part w of r(p),
// so the admissible exponent at step n is a*n + (largest g with p^g < w^n).
struct PlaceSearch {
  std::int64_t p = 0;
  PFreePart part;
  long double theta = 0.0L;  // log_p(u/v)
  long double log_p = 0.0L;

  long long exponent_at(long long n) const {
    if (part.u == 1 && part.v == 1) return part.a * n - 1;  // p^g < 1 forces g <= -1
    long double t = static_cast<long double>(n) * theta;
    long double nearest = nearbyintl(t);
    long long g;
    if (fabsl(t - nearest) < 1e-9L) {
      // Too close to call in long double; settle exactly.
      g = static_cast<long long>(nearest);
      while (pow_vs_pfree_power(p, g, part.u, part.v, n) >= 0) --g;
      while (pow_vs_pfree_power(p, g + 1, part.u, part.v, n) < 0) ++g;
    } else {
      g = static_cast<long long>(floorl(t));
    }
    return part.a * n + g;
  }
};

}  // namespace

WitnessScaling find_scaling(const RadiusAssignment& r) {
  if (!(r.log_norm() > 1e-9)) {
    throw Error(ErrorCode::NotSupercritical, "|r| must exceed 1 (margin 1e-9)");
  }

  std::vector<PlaceSearch> places;
  for (const auto& [p, value] : r.finite_support()) {
    PlaceSearch state;
    state.p = p;
    state.part = split_p_part(p, value);
    state.log_p = logl(static_cast<long double>(p));
    if (!(state.part.u == 1 && state.part.v == 1)) {
      state.theta = (log_big_int(state.part.u) - log_big_int(state.part.v)) /
                    static_cast<double>(state.log_p);
    }
    places.push_back(std::move(state));
  }

  const long double log_arch = logl(static_cast<long double>(r.archimedean()));
  constexpr long long kMaxRootExponent = 10000;
  std::vector<long long> exponents(places.size());

  for (long long n = 1; n <= kMaxRootExponent; ++n) {
    long double log_alpha = 0.0L;
    for (std::size_t i = 0; i < places.size(); ++i) {
      exponents[i] = places[i].exponent_at(n);
      log_alpha += static_cast<long double>(exponents[i]) * places[i].log_p;
    }
    if (log_arch + log_alpha / static_cast<long double>(n) > 1e-12L) {
      WitnessScaling scaling(r);
      scaling.root_exponent = n;
      for (std::size_t i = 0; i < places.size(); ++i) {
        scaling.alpha.set_exponent(places[i].p, exponents[i]);
        // The construction guarantees p^e < r(p)^n; keep the exact check as
        // the contract of the returned value.
        if (prime_power_vs_rational_power(places[i].p, exponents[i],
                                          r.finite_value(places[i].p), n) >= 0) {
          throw Error(ErrorCode::NumericFailure, "scaling certification failed");
        }
      }
      return scaling;
    }
  }
  throw Error(ErrorCode::SearchExhausted,
              "no admissible scaling with root exponent <= 10^4; margin too thin");
}

bool verify_point(const WitnessPoint& point, const RadiusAssignment& r) {
  const long long n = point.root_exponent;
  if (n < 1) throw Error(ErrorCode::DomainError, "root exponent must be positive");
  for (const auto& coordinate : point.coordinates) {
    if (coordinate.order < 1) throw Error(ErrorCode::DomainError, "root order must be positive");
  }

  // Common absolute value of every conjugate of every coordinate at v is
  // |alpha|_v^{-1/n}; the roots of unity contribute 1 at every place.
  std::vector<std::int64_t> primes;
  for (const auto& [p, value] : r.finite_support()) primes.push_back(p);
  for (const auto& [p, e] : point.alpha.exponents()) {
    if (r.finite_support().find(p) == r.finite_support().end()) primes.push_back(p);
  }
  for (std::int64_t p : primes) {
    // |alpha|_p^{-1/n} <= r(p)  <=>  p^{e_p} <= r(p)^n.
    if (prime_power_vs_rational_power(p, point.alpha.exponent_of(p), r.finite_value(p), n) > 0) {
      return false;
    }
  }
  double log_abs_arch = -point.alpha.log_value() / static_cast<double>(n);
  return log_abs_arch <= std::log(r.archimedean()) + 1e-12;
}

std::vector<WitnessPoint> enumerate_witnesses(const WitnessScaling& scaling, int count) {
  if (count < 0) throw Error(ErrorCode::DomainError, "count must be nonnegative");
  std::vector<WitnessPoint> points;
  points.reserve(count);
  const int d = scaling.base.dimension();
  for (int k = 1; k <= count; ++k) {
    WitnessPoint point;
    point.alpha = scaling.alpha;
    point.root_exponent = scaling.root_exponent;
    point.coordinates.assign(d, WitnessPoint::Coordinate{k, k > 1 ? 1 : 0});
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace adcap
