#include "adcap/green.hpp"

#include "adcap/errors.hpp"
#include "adcap/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace adcap {

namespace {

// LU with partial pivoting, factor stored in place.  perm is the row
// permutation; parity tracks the determinant sign.
struct LUFactors {
  int n = 0;
  std::vector<double> a;
  std::vector<int> perm;
  int parity = 1;
  bool singular = false;
};

LUFactors lu_factor(int n, const std::vector<double>& entries) {
  LUFactors lu;
  lu.n = n;
  lu.a = entries;
  lu.perm.resize(n);
  for (int i = 0; i < n; ++i) lu.perm[i] = i;
  auto at = [&](int i, int j) -> double& { return lu.a[static_cast<std::size_t>(i) * n + j]; };
  for (int k = 0; k < n; ++k) {
    int pivot_row = k;
    double pivot_mag = std::abs(at(k, k));
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(at(i, k)) > pivot_mag) {
        pivot_mag = std::abs(at(i, k));
        pivot_row = i;
      }
    }
    if (pivot_mag == 0.0) {
      lu.singular = true;
      return lu;
    }
    if (pivot_row != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot_row, j));
      std::swap(lu.perm[k], lu.perm[pivot_row]);
      lu.parity = -lu.parity;
    }
    for (int i = k + 1; i < n; ++i) {
      double factor = at(i, k) / at(k, k);
      at(i, k) = factor;
      for (int j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
    }
  }
  return lu;
}

std::vector<double> lu_solve(const LUFactors& lu, const std::vector<double>& b) {
  const int n = lu.n;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[lu.perm[i]];
  auto at = [&](int i, int j) { return lu.a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) x[i] -= at(i, j) * x[j];
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= at(i, j) * x[j];
    x[i] /= at(i, i);
  }
  return x;
}

double one_norm(int n, const std::vector<double>& entries) {
  double best = 0.0;
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) col += std::abs(entries[static_cast<std::size_t>(i) * n + j]);
    best = std::max(best, col);
  }
  return best;
}

// Determinant of the leading k x k block, fresh elimination per block.
double leading_minor(const GreensMatrix& matrix, int k, double* hadamard_bound) {
  std::vector<double> block(static_cast<std::size_t>(k) * k);
  double hadamard = 1.0;
  for (int i = 0; i < k; ++i) {
    double row_norm_sq = 0.0;
    for (int j = 0; j < k; ++j) {
      double value = -matrix.at(i, j);  // minors of -G
      block[static_cast<std::size_t>(i) * k + j] = value;
      row_norm_sq += value * value;
    }
    hadamard *= std::sqrt(row_norm_sq);
  }
  *hadamard_bound = hadamard;
  LUFactors lu = lu_factor(k, block);
  if (lu.singular) return 0.0;
  double det = lu.parity;
  for (int i = 0; i < k; ++i) det *= lu.a[static_cast<std::size_t>(i) * k + i];
  return det;
}

}  // namespace

GreensMatrix::GreensMatrix(int size, std::vector<double> entries,
                           std::vector<std::vector<int>> orbits)
    : n_(size), entries_(std::move(entries)), orbits_(std::move(orbits)) {
  if (n_ < 1) throw Error(ErrorCode::DomainError, "matrix size must be positive");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw Error(ErrorCode::DimensionMismatch, "entries are not n*n");
  }
  for (double e : entries_) {
    if (!std::isfinite(e)) throw Error(ErrorCode::DomainError, "matrix entry is not finite");
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) {
        throw Error(ErrorCode::AsymmetricMatrix,
                    "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                        ") differ");
      }
    }
  }
  if (orbits_.empty()) {
    for (int i = 0; i < n_; ++i) orbits_.push_back({i});
  }
  orbit_index_.assign(n_, -1);
  for (std::size_t b = 0; b < orbits_.size(); ++b) {
    for (int i : orbits_[b]) {
      if (i < 0 || i >= n_) throw Error(ErrorCode::DomainError, "orbit index out of range");
      if (orbit_index_[i] != -1) throw Error(ErrorCode::DomainError, "orbits overlap");
      orbit_index_[i] = static_cast<int>(b);
    }
  }
  for (int i = 0; i < n_; ++i) {
    if (orbit_index_[i] == -1) {
      throw Error(ErrorCode::DomainError, "orbits do not cover every index");
    }
  }
}

void validate(const GreensMatrix& matrix, const std::vector<std::vector<int>>& generators) {
  const int n = matrix.size();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& sigma = generators[g];
    if (static_cast<int>(sigma.size()) != n) {
      throw Error(ErrorCode::DomainError,
                  "generator " + std::to_string(g + 1) + " has wrong length");
    }
    std::vector<bool> seen(n, false);
    for (int image : sigma) {
      if (image < 0 || image >= n || seen[image]) {
        throw Error(ErrorCode::DomainError,
                    "generator " + std::to_string(g + 1) + " is not a permutation");
      }
      seen[image] = true;
    }
    for (int i = 0; i < n; ++i) {
      if (matrix.orbit_of(sigma[i]) != matrix.orbit_of(i)) {
        throw Error(ErrorCode::DomainError,
                    "generator " + std::to_string(g + 1) + " does not preserve the orbit of index " +
                        std::to_string(i + 1));
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (matrix.at(sigma[i], sigma[j]) != matrix.at(i, j)) {
          throw Error(ErrorCode::SymmetryViolation,
                      "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") not invariant under generator " + std::to_string(g + 1));
        }
      }
    }
  }
}

bool is_orbit_symmetric(const GreensMatrix& matrix, const std::vector<double>& values,
                        double tol) {
  for (const auto& orbit : matrix.orbits()) {
    double reference = values[orbit.front()];
    for (int i : orbit) {
      if (std::abs(values[i] - reference) > tol) return false;
    }
  }
  return true;
}

double sectional_capacity_from_weights(const GreensMatrix& matrix, const WeightVector& weights) {
  const int n = matrix.size();
  if (static_cast<int>(weights.values.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "weight vector length differs from matrix size");
  }
  for (double s : weights.values) {
    if (!(s > 0.0)) throw Error(ErrorCode::DomainError, "divisor weights must be positive");
  }
  if (!is_orbit_symmetric(matrix, weights.values, 1e-9)) {
    throw Error(ErrorCode::DomainError, "weight vector is not constant on orbits");
  }
  double form = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) form += weights.values[i] * matrix.at(i, j) * weights.values[j];
  }
  return std::exp(-form);
}

double cantor_rumely_capacity(const GreensMatrix& matrix) {
  GameMatrix game(matrix.size(), matrix.entries());
  return std::exp(-game_value(game).value);
}

bool is_negative_definite(const GreensMatrix& matrix, double minor_rel) {
  for (int k = 1; k <= matrix.size(); ++k) {
    double hadamard = 0.0;
    double minor = leading_minor(matrix, k, &hadamard);
    if (!(minor > minor_rel * hadamard)) return false;
  }
  return true;
}

Equilibrium equilibrium_weights(const GreensMatrix& matrix, const GreenTolerances& tol) {
  const int n = matrix.size();
  if (!is_negative_definite(matrix, tol.minor_rel)) {
    throw Error(ErrorCode::NotNegativeDefinite, "matrix is not negative definite");
  }
  LUFactors lu = lu_factor(n, matrix.entries());
  if (lu.singular) throw Error(ErrorCode::SingularMatrix, "exactly singular matrix");

  // kappa_1 estimate via the explicit inverse; n is small here.
  std::vector<double> inverse(static_cast<std::size_t>(n) * n);
  std::vector<double> unit(n, 0.0);
  for (int j = 0; j < n; ++j) {
    unit[j] = 1.0;
    std::vector<double> column = lu_solve(lu, unit);
    unit[j] = 0.0;
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(i) * n + j] = column[i];
  }
  double condition = one_norm(n, matrix.entries()) * one_norm(n, inverse);
  if (!(condition < tol.condition_cap)) {
    throw Error(ErrorCode::SingularMatrix, "condition estimate above cap");
  }

  std::vector<double> x = lu_solve(lu, std::vector<double>(n, 1.0));
  double sum = 0.0;
  for (double xi : x) sum += xi;
  if (sum == 0.0 || !std::isfinite(sum)) {
    throw Error(ErrorCode::SingularMatrix, "1' G^{-1} 1 vanished");
  }
  double lambda = 1.0 / sum;
  std::vector<double> s_hat(n);
  for (int i = 0; i < n; ++i) s_hat[i] = x[i] / sum;

  for (double si : s_hat) {
    if (!(si > 0.0)) {
      throw BoundaryOptimumError("maximum over the simplex lies on the boundary", s_hat);
    }
  }
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += matrix.at(i, j) * s_hat[j];
    if (std::abs(row - lambda) > tol.equal_components) {
      throw Error(ErrorCode::NumericFailure, "G s_hat is not constant to tolerance");
    }
  }
  if (!is_orbit_symmetric(matrix, s_hat, tol.symmetry)) {
    throw Error(ErrorCode::NumericFailure, "equilibrium weights are not orbit-symmetric");
  }

  Equilibrium eq;
  eq.s_hat.values = std::move(s_hat);
  eq.s_hat.normalization = WeightVector::Normalization::Simplex;
  eq.lambda = lambda;
  return eq;
}

double s_plus_support(const GreensMatrix& matrix, const GreenTolerances& tol) {
  return std::exp(-equilibrium_weights(matrix, tol).lambda);
}

}  // namespace adcap
