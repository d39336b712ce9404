#pragma once

#include <vector>

namespace adcap {

// Payoff matrix of a finite two-player zero-sum game, row player maximizing.
struct GameMatrix {
  int n = 0;
  std::vector<double> entries;  // row-major n*n

  GameMatrix() = default;
  GameMatrix(int size, std::vector<double> values);

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

struct GameSolution {
  double value = 0.0;
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
};

struct GameTolerances {
  double pivot = 1e-10;
  // 0 means the default cap of 10*n*(n+2) pivots.
  long long max_pivots = 0;
};

// Minimax value and a pair of optimal mixed strategies.  The matrix is
// first shifted by (1 + max(0, -min entry)) * J so that every entry is
// strictly positive, the standard game LP is solved by a primal simplex
// with Bland's anti-cycling rule, and the shift is subtracted back out.
// Ties between optimal strategies are resolved by the deterministic pivot
// order; the returned strategies are one optimal basic pair, not canonical.
GameSolution game_value(const GameMatrix& game, const GameTolerances& tol = {});

// Val(G + cJ) where J is the all-ones matrix; equals Val(G) + c.
double shifted_value(const GameMatrix& game, double c, const GameTolerances& tol = {});

}  // namespace adcap
