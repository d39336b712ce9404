#include "adcap/game.hpp"

#include "adcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adcap {

GameMatrix::GameMatrix(int size, std::vector<double> values)
    : n(size), entries(std::move(values)) {
  if (n < 1) throw Error(ErrorCode::DomainError, "game matrix must have positive size");
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::DimensionMismatch, "game matrix entries are not n*n");
  }
  for (double e : entries) {
    if (!std::isfinite(e)) throw Error(ErrorCode::DomainError, "game matrix entry is not finite");
  }
}

namespace {

// Dense tableau simplex for max 1'w  s.t.  Aw <= 1, w >= 0, with all
// entries of A strictly positive.  Bland's rule on both the entering and
// the leaving choice.  Returns false if the pivot cap is exhausted.
struct GameTableau {
  int n;                         // structural variables (columns of A)
  int m;                         // constraints (rows of A)
  std::vector<std::vector<double>> rows;  // m x (n + m + 1), last col = rhs
  std::vector<double> obj;                // n + m + 1 reduced costs + (-z)
  std::vector<int> basis;                 // variable basic in each row

  GameTableau(const GameMatrix& game, double shift) : n(game.n), m(game.n) {
    rows.assign(m, std::vector<double>(n + m + 1, 0.0));
    obj.assign(n + m + 1, 0.0);
    basis.resize(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) rows[i][j] = game.at(i, j) + shift;
      rows[i][n + i] = 1.0;
      rows[i][n + m] = 1.0;
      basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) obj[j] = 1.0;
  }

  bool solve(double pivot_tol, long long max_pivots) {
    for (long long iter = 0; iter < max_pivots; ++iter) {
      int entering = -1;
      for (int j = 0; j < n + m; ++j) {
        if (obj[j] > pivot_tol) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;  // optimal

      int leaving = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        double a = rows[i][entering];
        if (a > pivot_tol) {
          double ratio = rows[i][n + m] / a;
          if (ratio < best_ratio - pivot_tol ||
              (ratio < best_ratio + pivot_tol && (leaving < 0 || basis[i] < basis[leaving]))) {
            best_ratio = ratio;
            leaving = i;
          }
        }
      }
      if (leaving < 0) {
        // Unbounded; cannot happen with strictly positive entries.
        throw Error(ErrorCode::NumericFailure, "game LP unbounded");
      }
      pivot(leaving, entering);
    }
    return false;
  }

  void pivot(int r, int s) {
    double inv = 1.0 / rows[r][s];
    for (double& v : rows[r]) v *= inv;
    rows[r][s] = 1.0;  // avoid drift on the pivot element
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      double factor = rows[i][s];
      if (factor == 0.0) continue;
      for (int j = 0; j <= n + m; ++j) rows[i][j] -= factor * rows[r][j];
      rows[i][s] = 0.0;
    }
    double factor = obj[s];
    if (factor != 0.0) {
      for (int j = 0; j <= n + m; ++j) obj[j] -= factor * rows[r][j];
      obj[s] = 0.0;
    }
    basis[r] = s;
  }
};

std::vector<double> normalized_probabilities(std::vector<double> raw) {
  double sum = 0.0;
  for (double& x : raw) {
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (sum <= 0.0) throw Error(ErrorCode::NumericFailure, "degenerate strategy from LP");
  for (double& x : raw) x /= sum;
  return raw;
}

}  // namespace

GameSolution game_value(const GameMatrix& game, const GameTolerances& tol) {
  const int n = game.n;
  double min_entry = *std::min_element(game.entries.begin(), game.entries.end());
  double shift = 1.0 + std::max(0.0, -min_entry);

  GameTableau tableau(game, shift);
  long long cap = tol.max_pivots > 0 ? tol.max_pivots : 10LL * n * (n + 2);
  if (!tableau.solve(tol.pivot, cap)) {
    throw Error(ErrorCode::NumericFailure, "game LP exceeded the pivot cap");
  }

  double z = -tableau.obj[2 * n];  // optimal 1'w
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw Error(ErrorCode::NumericFailure, "game LP returned a nonpositive objective");
  }
  double shifted_val = 1.0 / z;

  std::vector<double> w(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (tableau.basis[i] < n) w[tableau.basis[i]] = tableau.rows[i][2 * n];
  }
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i) y[i] = -tableau.obj[n + i];  // duals of Aw <= 1

  GameSolution solution;
  solution.value = shifted_val - shift;
  solution.col_strategy = normalized_probabilities(std::move(w));
  solution.row_strategy = normalized_probabilities(std::move(y));
  return solution;
}

double shifted_value(const GameMatrix& game, double c, const GameTolerances& tol) {
  GameMatrix shifted = game;
  for (double& e : shifted.entries) e += c;
  return game_value(shifted, tol).value;
}

}  // namespace adcap
