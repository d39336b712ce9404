#include "adcap/rational.hpp"

#include "adcap/errors.hpp"

#include <cmath>
#include <cstdlib>

namespace adcap {

namespace mp = boost::multiprecision;

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::SchemaError, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::SchemaError, "zero denominator: " + text);
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
      return Rational(BigInt(text));
    }
    if (dot != std::string::npos && text.find('e') == std::string::npos &&
        text.find('E') == std::string::npos) {
      // Digit-exact decimal: "-3.25" -> -13/4.
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::size_t frac_len = text.size() - dot - 1;
      BigInt num(digits);
      return Rational(num, int_pow(BigInt(10), frac_len));
    }
    // Scientific notation: fall back to the (exact) double reading.
    return rational_from_double(std::strtod(text.c_str(), nullptr));
  } catch (const std::exception& e) {
    throw Error(ErrorCode::SchemaError, "bad rational literal \"" + text + "\": " + e.what());
  }
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 shifts bring the mantissa to an exact integer.
  BigInt m(static_cast<long long>(std::ldexp(mant, 53)));
  exp -= 53;
  if (exp >= 0) return Rational(m * int_pow(BigInt(2), exp));
  return Rational(m, int_pow(BigInt(2), -exp));
}

std::string rational_to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

double log_big_int(const BigInt& n) {
  if (n <= 0) throw Error(ErrorCode::DomainError, "log of nonpositive integer");
  unsigned bits = mp::msb(n);
  if (bits <= 900) return std::log(n.convert_to<double>());
  unsigned shift = bits - 64;
  BigInt top = n >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double log_rational(const Rational& q) {
  if (q <= 0) throw Error(ErrorCode::DomainError, "log of nonpositive rational");
  return log_big_int(mp::numerator(q)) - log_big_int(mp::denominator(q));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt int_pow(const BigInt& base, unsigned long long exp) {
  BigInt result(1), b(base);
  while (exp > 0) {
    if (exp & 1ULL) result *= b;
    exp >>= 1ULL;
    if (exp > 0) b *= b;
  }
  return result;
}

long long ord_at_prime(const BigInt& n, std::int64_t p) {
  if (n == 0) throw Error(ErrorCode::DomainError, "ord of zero");
  BigInt m = mp::abs(n);
  long long ord = 0;
  BigInt prime(p);
  while (m % prime == 0) {
    m /= prime;
    ++ord;
  }
  return ord;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1ULL) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1ULL;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit with the first twelve primes.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1ULL) == 0) {
    d >>= 1ULL;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace adcap
