#include "adcap/green.hpp"
#include "adcap/errors.hpp"
#include "adcap/game.hpp"
#include "adcap/oracle.hpp"

#include <doctest.h>

#include <algorithm>
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

// Random negative definite matrix with an interior equilibrium.
GreensMatrix random_interior_nd(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (double& x : a) x = entry(rng);
    std::vector<double> g(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) {
          dot += a[static_cast<std::size_t>(i) * n + k] * a[static_cast<std::size_t>(j) * n + k];
        }
        g[static_cast<std::size_t>(i) * n + j] = -dot - (i == j ? 0.3 : 0.0);
      }
    }
    GreensMatrix candidate(n, g);
    try {
      Equilibrium eq = equilibrium_weights(candidate);
      if (*std::min_element(eq.s_hat.values.begin(), eq.s_hat.values.end()) >= 0.02) {
        return candidate;
      }
    } catch (const Error&) {
    }
  }
  FAIL("could not generate an interior-equilibrium matrix");
  return GreensMatrix(1, {-1.0});
}

}  // namespace

TEST_CASE("construction and validation") {
  GreensMatrix trivial(1, {std::log(2.0)});
  validate(trivial, {});

  GreensMatrix pair(2, {-2, -1, -1, -2}, {{0, 1}});
  validate(pair, {{1, 0}});

  CHECK(code_of([] { GreensMatrix(2, {-2, -1, 0, -2}); }) == ErrorCode::AsymmetricMatrix);

  SUBCASE("symmetry violation names the offence") {
    GreensMatrix lopsided(2, {-2, -1, -1, -3}, {{0, 1}});
    CHECK(code_of([&] { validate(lopsided, {{1, 0}}); }) == ErrorCode::SymmetryViolation);
  }
  SUBCASE("generators must preserve orbits") {
    GreensMatrix split(2, {-2, 0, 0, -2}, {{0}, {1}});
    CHECK(code_of([&] { validate(split, {{1, 0}}); }) == ErrorCode::DomainError);
  }
  SUBCASE("orbit partition must cover") {
    CHECK_THROWS_AS(GreensMatrix(2, {-1, 0, 0, -1}, {{0}}), Error);
    CHECK_THROWS_AS(GreensMatrix(2, {-1, 0, 0, -1}, {{0, 0}, {1}}), Error);
  }
}

TEST_CASE("sectional capacity from divisor weights") {
  // The radius-1/2 disc fixture: -ln(S) = 1 * ln 2 * 1.
  GreensMatrix counter(1, {std::log(2.0)});
  WeightVector one{{1.0}, WeightVector::Normalization::Divisor};
  CHECK(sectional_capacity_from_weights(counter, one) == doctest::Approx(0.5).epsilon(1e-14));

  GreensMatrix zero(2, {0, 0, 0, 0});
  WeightVector ones{{1.0, 1.0}, WeightVector::Normalization::Divisor};
  CHECK(sectional_capacity_from_weights(zero, ones) == 1.0);

  GreensMatrix pair(2, {-2, -1, -1, -2});
  // Quadratic form by hand: (1,1) G (1,1)^t = -6.
  CHECK(sectional_capacity_from_weights(pair, ones) ==
        doctest::Approx(std::exp(6.0)).epsilon(1e-13));

  SUBCASE("errors") {
    CHECK(code_of([&] { sectional_capacity_from_weights(pair, one); }) ==
          ErrorCode::DimensionMismatch);
    WeightVector bad{{1.0, 0.0}, WeightVector::Normalization::Divisor};
    CHECK(code_of([&] { sectional_capacity_from_weights(pair, bad); }) == ErrorCode::DomainError);
    GreensMatrix orbit_pair(2, {-2, -1, -1, -2}, {{0, 1}});
    WeightVector uneven{{1.0, 2.0}, WeightVector::Normalization::Divisor};
    CHECK(code_of([&] { sectional_capacity_from_weights(orbit_pair, uneven); }) ==
          ErrorCode::DomainError);
  }
}

TEST_CASE("Cantor-Rumely capacity") {
  CHECK(cantor_rumely_capacity(GreensMatrix(1, {std::log(2.0)})) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(cantor_rumely_capacity(GreensMatrix(1, {0.0})) == doctest::Approx(1.0).epsilon(1e-13));

  GreensMatrix pair(2, {-2, -1, -1, -2});
  // Grid oracle first: the symmetric game value is the simplex maximum.
  oracle::GridMax grid = oracle::grid_max_quadratic(pair, oracle::GridSpec(2, 1e-3));
  CHECK(grid.value == doctest::Approx(-1.5).epsilon(1e-6));
  CHECK(cantor_rumely_capacity(pair) == doctest::Approx(std::exp(1.5)).epsilon(1e-10));
}

TEST_CASE("negative definiteness by Sylvester minors") {
  CHECK(is_negative_definite(GreensMatrix(2, {-1, 0, 0, -1})));
  CHECK_FALSE(is_negative_definite(GreensMatrix(2, {1, 0, 0, -1})));
  CHECK(is_negative_definite(GreensMatrix(2, {-2, -1, -1, -2})));  // eigenvalues -1, -3
  CHECK_FALSE(is_negative_definite(GreensMatrix(2, {-1, -2, -2, -1})));  // indefinite
  CHECK_FALSE(is_negative_definite(GreensMatrix(1, {0.0})));
  CHECK(is_negative_definite(GreensMatrix(1, {-0.25})));
}

TEST_CASE("equilibrium weights") {
  GreensMatrix pair(2, {-2, -1, -1, -2});
  Equilibrium eq = equilibrium_weights(pair);
  CHECK(eq.s_hat.values[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eq.s_hat.values[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eq.lambda == doctest::Approx(-1.5).epsilon(1e-12));
  oracle::GridMax grid = oracle::grid_max_quadratic(pair, oracle::GridSpec(2, 1e-3));
  CHECK(std::abs(grid.value - eq.lambda) <= 1e-3);
  CHECK(grid.value <= eq.lambda + 1e-12);

  Equilibrium single = equilibrium_weights(GreensMatrix(1, {-0.7}));
  CHECK(single.s_hat.values == std::vector<double>{1.0});
  CHECK(single.lambda == doctest::Approx(-0.7).epsilon(1e-14));

  Equilibrium diag = equilibrium_weights(GreensMatrix(2, {-10, 0, 0, -1}));
  CHECK(diag.s_hat.values[0] == doctest::Approx(1.0 / 11).epsilon(1e-12));
  CHECK(diag.s_hat.values[1] == doctest::Approx(10.0 / 11).epsilon(1e-12));
  CHECK(diag.lambda == doctest::Approx(-10.0 / 11).epsilon(1e-12));
}

TEST_CASE("boundary optimum is reported, not silently clipped") {
  GreensMatrix tilted(2, {-1, -1.9, -1.9, -4});
  REQUIRE(is_negative_definite(tilted));
  try {
    equilibrium_weights(tilted);
    FAIL("expected BoundaryOptimum");
  } catch (const BoundaryOptimumError& e) {
    REQUIRE(e.stationary_point().size() == 2);
    CHECK(*std::min_element(e.stationary_point().begin(), e.stationary_point().end()) <= 0.0);
  }
  // The oracle confirms the simplex maximum sits on the boundary.
  oracle::GridMax grid = oracle::grid_max_quadratic(tilted, oracle::GridSpec(2, 1e-3));
  CHECK(*std::min_element(grid.argmax.begin(), grid.argmax.end()) == 0.0);
}

TEST_CASE("singular and non-definite failures") {
  CHECK(code_of([] { equilibrium_weights(GreensMatrix(2, {1, 0, 0, 1})); }) ==
        ErrorCode::NotNegativeDefinite);
  CHECK(code_of([] { s_plus_support(GreensMatrix(2, {1, 0, 0, 1})); }) ==
        ErrorCode::NotNegativeDefinite);
  CHECK(code_of([] { equilibrium_weights(GreensMatrix(2, {-1, 0, 0, -1e-13})); }) ==
        ErrorCode::SingularMatrix);
}

TEST_CASE("outer sectional capacity at the equilibrium divisor") {
  CHECK(s_plus_support(GreensMatrix(2, {-2, -1, -1, -2})) ==
        doctest::Approx(std::exp(1.5)).epsilon(1e-12));
  CHECK(s_plus_support(GreensMatrix(1, {-std::log(2.0)})) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("interior equilibria match the game value and the grid oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    GreensMatrix matrix = random_interior_nd(rng, n);
    Equilibrium eq = equilibrium_weights(matrix);
    double val = game_value(GameMatrix(n, matrix.entries())).value;
    CHECK(std::abs(eq.lambda - val) <= 1e-6);
    CHECK(std::abs(s_plus_support(matrix) / cantor_rumely_capacity(matrix) - 1.0) <= 1e-6);
    oracle::GridMax grid = oracle::grid_max_quadratic(matrix, oracle::GridSpec(n, 1e-2));
    CHECK(grid.value <= eq.lambda + 1e-12);
    CHECK(eq.lambda - grid.value <= 1e-1);
  }
}

TEST_CASE("monotone consistency between value and capacity") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    std::vector<double> a(static_cast<std::size_t>(n) * n), b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = entry(rng);
      b[i] = entry(rng);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        a[static_cast<std::size_t>(i) * n + j] = a[static_cast<std::size_t>(j) * n + i];
        b[static_cast<std::size_t>(i) * n + j] = b[static_cast<std::size_t>(j) * n + i];
      }
    }
    GreensMatrix ga(n, a), gb(n, b);
    double va = game_value(GameMatrix(n, a)).value;
    double vb = game_value(GameMatrix(n, b)).value;
    if (va >= vb) {
      CHECK(cantor_rumely_capacity(ga) <= cantor_rumely_capacity(gb) * (1 + 1e-12));
    } else {
      CHECK(cantor_rumely_capacity(gb) <= cantor_rumely_capacity(ga) * (1 + 1e-12));
    }
  }
}

TEST_CASE("equilibrium weights are invariant under registered symmetries") {
  // Two Galois orbits of size two; the generator swaps within each orbit.
  std::vector<double> entries = {
      -3.0, -1.0, -0.5, -0.5,
      -1.0, -3.0, -0.5, -0.5,
      -0.5, -0.5, -2.0, -0.4,
      -0.5, -0.5, -0.4, -2.0,
  };
  GreensMatrix matrix(4, entries, {{0, 1}, {2, 3}});
  std::vector<int> swap_both = {1, 0, 3, 2};
  validate(matrix, {swap_both});
  REQUIRE(is_negative_definite(matrix));
  Equilibrium eq = equilibrium_weights(matrix);
  CHECK(eq.s_hat.values[0] == doctest::Approx(eq.s_hat.values[1]).epsilon(1e-12));
  CHECK(eq.s_hat.values[2] == doctest::Approx(eq.s_hat.values[3]).epsilon(1e-12));
  for (int i = 0; i < 4; ++i) {
    CHECK(eq.s_hat.values[swap_both[i]] == doctest::Approx(eq.s_hat.values[i]).epsilon(1e-12));
  }
}
