#include "adcap/game.hpp"
#include "adcap/errors.hpp"
#include "adcap/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace adcap;

namespace {

GameMatrix random_game(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> entry(lo, hi);
  std::vector<double> entries(static_cast<std::size_t>(n) * n);
  for (double& e : entries) e = entry(rng);
  return GameMatrix(n, entries);
}

}  // namespace

TEST_CASE("1x1 game is its entry") {
  GameSolution sol = game_value(GameMatrix(1, {-3.7}));
  CHECK(sol.value == doctest::Approx(-3.7).epsilon(1e-12));
  CHECK(sol.row_strategy == std::vector<double>{1.0});
  CHECK(sol.col_strategy == std::vector<double>{1.0});
}

TEST_CASE("matching pennies") {
  GameMatrix game(2, {0, 1, 1, 0});
  // Closed form first: no saddle, (ad-bc)/(a+d-b-c) = 1/2.
  CHECK(oracle::game_value_2x2(game) == doctest::Approx(0.5).epsilon(1e-15));
  GameSolution sol = game_value(game);
  CHECK(sol.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sol.row_strategy[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(sol.col_strategy[0] == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("2x2 mixed game against the closed form") {
  GameMatrix game(2, {2, -1, -1, 1});
  double closed = oracle::game_value_2x2(game);
  CHECK(closed == doctest::Approx(0.2).epsilon(1e-15));
  GameSolution sol = game_value(game);
  CHECK(sol.value == doctest::Approx(closed).epsilon(1e-10));
  CHECK(sol.row_strategy[0] == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(sol.row_strategy[1] == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(sol.col_strategy[0] == doctest::Approx(0.4).epsilon(1e-10));
}

TEST_CASE("optimal strategies satisfy both guarantees") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    GameMatrix game = random_game(rng, n, -5.0, 5.0);
    GameSolution sol = game_value(game);
    double sum_row = 0.0, sum_col = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(sol.row_strategy[i] >= 0.0);
      CHECK(sol.col_strategy[i] >= 0.0);
      sum_row += sol.row_strategy[i];
      sum_col += sol.col_strategy[i];
    }
    CHECK(sum_row == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sum_col == doctest::Approx(1.0).epsilon(1e-12));
    for (int j = 0; j < n; ++j) {
      double row_vs_col = 0.0;  // row strategy against pure column j
      double col_vs_row = 0.0;  // pure row j against column strategy
      for (int i = 0; i < n; ++i) {
        row_vs_col += sol.row_strategy[i] * game.at(i, j);
        col_vs_row += game.at(j, i) * sol.col_strategy[i];
      }
      CHECK(row_vs_col >= sol.value - 1e-8);
      CHECK(col_vs_row <= sol.value + 1e-8);
    }
    // Bilinear value at the returned pair.
    double bilinear = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        bilinear += sol.row_strategy[i] * game.at(i, j) * sol.col_strategy[j];
      }
    }
    CHECK(bilinear == doctest::Approx(sol.value).epsilon(1e-8));
  }
}

TEST_CASE("shifted value") {
  CHECK(shifted_value(GameMatrix(1, {0.0}), 3.0) == doctest::Approx(3.0).epsilon(1e-12));
  GameMatrix pennies(2, {0, 1, 1, 0});
  CHECK(shifted_value(pennies, 2.0) == doctest::Approx(2.5).epsilon(1e-10));
  GameMatrix game(3, {1, -2, 0, 3, 0.5, -1, 0, 2, 1});
  CHECK(shifted_value(game, 0.0) == doctest::Approx(game_value(game).value).epsilon(1e-12));
}

TEST_CASE("shift invariance on random games") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    GameMatrix game = random_game(rng, n, -10.0, 10.0);
    double c = shift(rng);
    CHECK(std::abs(shifted_value(game, c) - game_value(game).value - c) <= 1e-8);
  }
}

TEST_CASE("positive scaling scales the value") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> scale(0.1, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    GameMatrix game = random_game(rng, n, -3.0, 3.0);
    double a = scale(rng);
    GameMatrix scaled = game;
    for (double& e : scaled.entries) e *= a;
    CHECK(game_value(scaled).value ==
          doctest::Approx(a * game_value(game).value).epsilon(1e-8));
  }
}

TEST_CASE("grid bounds bracket the value for small games") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    GameMatrix game = random_game(rng, n, -0.2, 0.2);
    double value = game_value(game).value;
    auto [lower, upper] = oracle::game_value_grid_bounds(game, 1e-3);
    CHECK(lower <= value + 1e-9);
    CHECK(upper >= value - 1e-9);
    CHECK(std::abs(value - lower) <= 1e-3);
    CHECK(std::abs(upper - value) <= 1e-3);
  }
}

TEST_CASE("pivot cap raises NumericFailure") {
  GameTolerances tight;
  tight.max_pivots = 1;
  CHECK_THROWS_AS(game_value(GameMatrix(2, {0, 1, 1, 0}), tight), Error);
  try {
    game_value(GameMatrix(2, {0, 1, 1, 0}), tight);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NumericFailure);
  }
}

TEST_CASE("game matrix validation") {
  CHECK_THROWS_AS(GameMatrix(2, {1, 2, 3}), Error);
  CHECK_THROWS_AS(GameMatrix(0, {}), Error);
  CHECK_THROWS_AS(GameMatrix(1, {std::nan("")}), Error);
}
