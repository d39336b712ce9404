#include "adcap/oracle.hpp"

#include "adcap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adcap {
namespace oracle {

GridSpec::GridSpec(int dim, double grid_step) : dimension(dim), step(grid_step) {
  if (dimension < 1) throw Error(ErrorCode::DomainError, "grid dimension must be positive");
  if (dimension > 4) throw Error(ErrorCode::ScaleCap, "grid oracle capped at dimension 4");
  if (!(step > 0.0) || step > 1.0) throw Error(ErrorCode::DomainError, "step must lie in (0,1]");
}

namespace {

double quadratic_form(const GreensMatrix& matrix, const long long* k, int n) {
  double value = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      value += static_cast<double>(k[i]) * matrix.at(i, j) * static_cast<double>(k[j]);
    }
  }
  return value;
}

}  // namespace

GridMax grid_max_quadratic(const GreensMatrix& matrix, const GridSpec& spec) {
  const int n = matrix.size();
  if (spec.dimension != n) {
    throw Error(ErrorCode::DimensionMismatch, "grid dimension differs from matrix size");
  }
  const long long N = std::max(1LL, std::llround(1.0 / spec.step));

  long long k[4] = {0, 0, 0, 0};
  double best = -std::numeric_limits<double>::infinity();
  long long best_k[4] = {0, 0, 0, 0};

  // Lexicographic sweep over compositions of N.  The last coordinate is
  // determined, so the innermost free coordinate moves along the line
  // (k[n-2]+t, k[n-1]-t) where the form has constant second difference.
  auto sweep_line = [&](long long remainder) {
    if (n == 1) {
      k[0] = remainder;
      double f = quadratic_form(matrix, k, n);
      if (f > best) {
        best = f;
        std::copy(k, k + n, best_k);
      }
      return;
    }
    const int a = n - 2, b = n - 1;
    k[a] = 0;
    k[b] = remainder;
    double f = quadratic_form(matrix, k, n);
    // First difference of f along (k[a]+1, k[b]-1) at t = 0.
    double ga = 0.0, gb = 0.0;
    for (int j = 0; j < n; ++j) {
      ga += matrix.at(a, j) * static_cast<double>(k[j]);
      gb += matrix.at(b, j) * static_cast<double>(k[j]);
    }
    const double curvature = matrix.at(a, a) + matrix.at(b, b) - 2.0 * matrix.at(a, b);
    double df = 2.0 * (ga - gb) + curvature;
    const double ddf = 2.0 * curvature;
    for (long long t = 0;; ++t) {
      k[a] = t;
      k[b] = remainder - t;
      if (f > best) {
        best = f;
        std::copy(k, k + n, best_k);
      }
      if (t == remainder) break;
      f += df;
      df += ddf;
    }
  };

  if (n <= 2) {
    sweep_line(N);
  } else if (n == 3) {
    for (k[0] = 0; k[0] <= N; ++k[0]) sweep_line(N - k[0]);
  } else {
    for (k[0] = 0; k[0] <= N; ++k[0]) {
      for (k[1] = 0; k[1] <= N - k[0]; ++k[1]) sweep_line(N - k[0] - k[1]);
    }
  }

  GridMax result;
  result.value = best / (static_cast<double>(N) * static_cast<double>(N));
  result.argmax.resize(n);
  for (int i = 0; i < n; ++i) {
    result.argmax[i] = static_cast<double>(best_k[i]) / static_cast<double>(N);
  }
  return result;
}

double game_value_2x2(const GameMatrix& game) {
  if (game.n != 2) throw Error(ErrorCode::DomainError, "closed form requires a 2x2 game");
  const double a = game.at(0, 0), b = game.at(0, 1);
  const double c = game.at(1, 0), d = game.at(1, 1);
  // Pure saddle: minimum of its row and maximum of its column.
  const double row_min[2] = {std::min(a, b), std::min(c, d)};
  const double col_max[2] = {std::max(a, c), std::max(b, d)};
  const double entry[2][2] = {{a, b}, {c, d}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (entry[i][j] == row_min[i] && entry[i][j] == col_max[j]) return entry[i][j];
    }
  }
  return (a * d - b * c) / (a + d - b - c);
}

std::pair<double, double> game_value_grid_bounds(const GameMatrix& game, double step) {
  const int n = game.n;
  if (n > 3) throw Error(ErrorCode::ScaleCap, "game grid oracle capped at 3x3");
  if (!(step > 0.0) || step > 1.0) throw Error(ErrorCode::DomainError, "step must lie in (0,1]");
  const long long N = std::max(1LL, std::llround(1.0 / step));

  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();

  // For a fixed mixed strategy the opponent's best reply is pure, so one
  // lattice pass per side brackets the value.
  auto for_each_lattice = [&](auto&& visit) {
    long long k[3] = {0, 0, 0};
    if (n == 1) {
      k[0] = N;
      visit(k);
      return;
    }
    if (n == 2) {
      for (k[0] = 0; k[0] <= N; ++k[0]) {
        k[1] = N - k[0];
        visit(k);
      }
      return;
    }
    for (k[0] = 0; k[0] <= N; ++k[0]) {
      for (k[1] = 0; k[1] <= N - k[0]; ++k[1]) {
        k[2] = N - k[0] - k[1];
        visit(k);
      }
    }
  };

  for_each_lattice([&](const long long* k) {
    double worst_col = std::numeric_limits<double>::infinity();
    double worst_row = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      double against_col = 0.0;  // row strategy k vs pure column j
      double against_row = 0.0;  // pure row j vs column strategy k
      for (int i = 0; i < n; ++i) {
        against_col += static_cast<double>(k[i]) * game.at(i, j);
        against_row += game.at(j, i) * static_cast<double>(k[i]);
      }
      worst_col = std::min(worst_col, against_col);
      worst_row = std::max(worst_row, against_row);
    }
    lower = std::max(lower, worst_col / static_cast<double>(N));
    upper = std::min(upper, worst_row / static_cast<double>(N));
  });
  return {lower, upper};
}

namespace {

long double log_big_int_ld(const BigInt& n) {
  unsigned bits = boost::multiprecision::msb(n);
  if (bits <= 900) return logl(n.convert_to<long double>());
  unsigned shift = bits - 64;
  BigInt top = n >> shift;
  return logl(top.convert_to<long double>()) + static_cast<long double>(shift) * logl(2.0L);
}

long double log_norm_ld(const RadiusAssignment& radii) {
  long double sum = logl(static_cast<long double>(radii.archimedean()));
  for (const auto& [p, value] : radii.finite_support()) {
    sum += log_big_int_ld(boost::multiprecision::numerator(value)) -
           log_big_int_ld(boost::multiprecision::denominator(value));
  }
  return sum;
}

}  // namespace

long double polydisk_capacity_extended(int d, const RadiusAssignment& radii) {
  if (radii.dimension() != d) {
    throw Error(ErrorCode::DimensionMismatch, "radius dimension differs from polydisk dimension");
  }
  return expl(static_cast<long double>(d) * log_norm_ld(radii));
}

long double pullback_capacity_extended(const PullbackCandidate& candidate) {
  const auto& m = candidate.morphism;
  long double exponent = static_cast<long double>(m.d) * static_cast<long double>(m.degree) /
                         powl(static_cast<long double>(m.multiplicity), m.d + 1);
  return expl(exponent * log_norm_ld(candidate.radii));
}

}  // namespace oracle
}  // namespace adcap
