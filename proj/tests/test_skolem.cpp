#include "adcap/skolem.hpp"
#include "adcap/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

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

// Polynomial product, exact; oracle for the block-diagonal identity.
std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

MultiplicationMatrix random_matrix(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 9);
  std::vector<Rational> entries;
  for (int i = 0; i < r * r; ++i) entries.emplace_back(num(rng), den(rng));
  return MultiplicationMatrix(r, entries);
}

}  // namespace

TEST_CASE("injective monomial exponents") {
  {
    ExponentSet sigma(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto m = monomial_exponents(sigma);
    CHECK(m == std::vector<long long>{1, 2});
    std::set<long long> images;
    for (const auto& point : sigma.points) images.insert(point[0] + 2 * point[1]);
    CHECK(images == std::set<long long>{0, 1, 2, 3});
  }
  {
    ExponentSet singleton(3, {{4, 7, 9}});
    CHECK(monomial_exponents(singleton) == std::vector<long long>{1, 1, 1});
  }
  {
    // m_2 = 1 collides: both points map to 3.
    ExponentSet sigma(2, {{0, 3}, {3, 0}});
    auto m = monomial_exponents(sigma);
    CHECK(m == std::vector<long long>{1, 2});
  }
}

TEST_CASE("exponent set validation") {
  CHECK(code_of([] { ExponentSet(2, {}); }) == ErrorCode::DomainError);
  CHECK(code_of([] { ExponentSet(2, {{1, 2}, {1, 2}}); }) == ErrorCode::DomainError);
  CHECK(code_of([] { ExponentSet(2, {{1, 2, 3}}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { ExponentSet(2, {{-1, 0}}); }) == ErrorCode::DomainError);
}

TEST_CASE("random exponent sets stay injective") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long long> coord(0, 20);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    int size = 1 + static_cast<int>(rng() % 25);
    if (n == 1) size = std::min(size, 21);  // only 21 distinct 1-tuples exist
    std::set<std::vector<long long>> points;
    while (static_cast<int>(points.size()) < size) {
      std::vector<long long> point(n);
      for (auto& c : point) c = coord(rng);
      points.insert(point);
    }
    ExponentSet sigma(n, {points.begin(), points.end()});
    auto m = monomial_exponents(sigma);
    CHECK(m[0] == 1);
    std::set<long long> images;
    for (const auto& point : sigma.points) {
      long long image = 0;
      for (int l = 0; l < n; ++l) image += m[l] * point[l];
      CHECK(images.insert(image).second);
    }
  }
}

TEST_CASE("substitution preserves the coefficient multiset") {
  // f = 3 x^2 y + 3 x + 7 y^3: distinct t-degrees keep all three terms.
  ExponentSet sigma(2, {{2, 1}, {1, 0}, {0, 3}});
  auto m = monomial_exponents(sigma);
  std::multiset<long long> degrees;
  for (const auto& point : sigma.points) degrees.insert(m[0] * point[0] + m[1] * point[1]);
  CHECK(degrees.size() == 3);
  CHECK(std::set<long long>(degrees.begin(), degrees.end()).size() == 3);
}

TEST_CASE("characteristic polynomials, exact") {
  {
    MultiplicationMatrix nilpotent(2, {Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK(char_poly(nilpotent) == std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
  }
  {
    MultiplicationMatrix diag(2, {Rational(2), Rational(0), Rational(0), Rational(3)});
    CHECK(char_poly(diag) == std::vector<Rational>{Rational(6), Rational(-5), Rational(1)});
  }
  {
    MultiplicationMatrix rotation(2, {Rational(0), Rational(-1), Rational(1), Rational(0)});
    CHECK(char_poly(rotation) == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  }
}

TEST_CASE("characteristic polynomial coefficients against hand determinants") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    MultiplicationMatrix z = random_matrix(rng, 2);
    auto coefficients = char_poly(z);
    Rational det = z.at(0, 0) * z.at(1, 1) - z.at(0, 1) * z.at(1, 0);
    Rational tr = z.at(0, 0) + z.at(1, 1);
    CHECK(coefficients[0] == det);
    CHECK(coefficients[1] == -tr);
    CHECK(coefficients[2] == 1);
  }
}

TEST_CASE("block diagonal characteristic polynomial factors") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    MultiplicationMatrix a = random_matrix(rng, 2);
    MultiplicationMatrix b = random_matrix(rng, 3);
    std::vector<Rational> block(25, Rational(0));
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) block[static_cast<std::size_t>(i) * 5 + j] = a.at(i, j);
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        block[static_cast<std::size_t>(i + 2) * 5 + (j + 2)] = b.at(i, j);
      }
    }
    CHECK(char_poly(MultiplicationMatrix(5, block)) == poly_mul(char_poly(a), char_poly(b)));
  }
}

TEST_CASE("Cayley-Hamilton holds exactly") {
  CHECK(cayley_hamilton_check(MultiplicationMatrix(2, {Rational(0), Rational(1), Rational(0), Rational(0)})));
  CHECK(cayley_hamilton_check(MultiplicationMatrix(2, {Rational(2), Rational(0), Rational(0), Rational(3)})));

  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5);
    CHECK(cayley_hamilton_check(random_matrix(rng, r)));
  }

  SUBCASE("negative control") {
    MultiplicationMatrix unit(1, {Rational(1)});
    auto perturbed = char_poly(unit);
    perturbed[0] += 1;
    CHECK_FALSE(poly_annihilates(perturbed, unit));
  }
}

TEST_CASE("leading unit check") {
  CHECK(leading_unit_check({Rational(6), Rational(-5), Rational(1)}));
  CHECK_FALSE(leading_unit_check({Rational(1), Rational(2)}));  // 2t + 1 over Z
  CHECK(leading_unit_check({Rational(0), Rational(0), Rational(0), Rational(-1)}));  // -t^3
  CHECK(leading_unit_check({Rational(0), Rational(1), Rational(0)}));  // trailing zeros ignored
  CHECK(leading_unit_check({Rational(6), Rational(-5), Rational(1)}, true));
  CHECK(code_of([] { leading_unit_check({Rational(0), Rational(0)}); }) == ErrorCode::DomainError);
}

TEST_CASE("multiplication matrix validation") {
  CHECK_THROWS_AS(MultiplicationMatrix(0, {}), Error);
  CHECK_THROWS_AS(MultiplicationMatrix(2, {Rational(1)}), Error);
}
