#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace adcap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "p", or a decimal string into an exact rational.
// Decimal strings are read digit-exactly ("0.25" -> 1/4), so finite-place
// values given as decimals stay exact.
Rational parse_rational(const std::string& text);

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

// Canonical "p/q" form; integers print without the "/1".
std::string rational_to_string(const Rational& q);

// Natural log that stays finite for operands far outside double range.
double log_big_int(const BigInt& n);     // n > 0
double log_rational(const Rational& q);  // q > 0

double to_double(const Rational& q);

BigInt int_pow(const BigInt& base, unsigned long long exp);

// Largest e with p^e dividing n (n != 0).
long long ord_at_prime(const BigInt& n, std::int64_t p);

bool is_prime_u64(std::uint64_t n);

}  // namespace adcap
