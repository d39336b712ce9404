#pragma once

#include <vector>

namespace adcap {

// Symmetric Green's matrix together with the Galois-orbit partition of its
// index set.  Indices are 0-based internally; the CLI boundary is 1-based.
class GreensMatrix {
 public:
  // orbits must partition {0..n-1}; when empty, singleton orbits are used.
  GreensMatrix(int size, std::vector<double> entries,
               std::vector<std::vector<int>> orbits = {});

  int size() const { return n_; }
  double at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const { return entries_; }
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int orbit_of(int i) const { return orbit_index_[i]; }

 private:
  int n_;
  std::vector<double> entries_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_index_;
};

// Nonnegative weight vector on the index set, constant on Galois orbits.
// Simplex vectors sum to 1 (the set P of mixed weights); Divisor vectors
// are the positive coefficient vectors of X_1 = sum s_i x_i.
struct WeightVector {
  enum class Normalization { Simplex, Divisor };

  std::vector<double> values;
  Normalization normalization = Normalization::Divisor;
};

// Checks symmetry and invariance of the matrix under each registered
// generator (one-line notation, 0-based, must fix every orbit setwise).
// Throws AsymmetricMatrix or SymmetryViolation naming the offence.
void validate(const GreensMatrix& matrix, const std::vector<std::vector<int>>& generators);

// Is a weight vector constant on each orbit (F-symmetric), up to tol?
bool is_orbit_symmetric(const GreensMatrix& matrix, const std::vector<double>& values,
                        double tol);

// exp(-s^t G s) for a divisor weight vector s.
double sectional_capacity_from_weights(const GreensMatrix& matrix, const WeightVector& weights);

// exp(-Val(G)) with G read as a matrix game.
double cantor_rumely_capacity(const GreensMatrix& matrix);

// Sylvester's criterion on -G: every leading principal minor positive,
// determinants by partial-pivoting elimination, threshold relative to the
// Hadamard bound of the block.
bool is_negative_definite(const GreensMatrix& matrix, double minor_rel = 1e-12);

struct GreenTolerances {
  double equal_components = 1e-9;   // Gs constant up to this
  double symmetry = 1e-9;           // F-symmetry of the solved weights
  double condition_cap = 1e12;      // SingularMatrix beyond this
  double minor_rel = 1e-12;         // Sylvester minor threshold
};

struct Equilibrium {
  WeightVector s_hat;  // Simplex-normalized, all entries positive
  double lambda = 0.0;  // s_hat^t G s_hat = max over the simplex
};

// The interior maximizer of s -> s^t G s over the probability simplex for
// negative definite G: s_hat = G^{-1} 1 / (1' G^{-1} 1), lambda = 1/(1' G^{-1} 1).
// G s_hat has all components equal to lambda, and lambda = Val(G).
// Throws NotNegativeDefinite, SingularMatrix, or BoundaryOptimum (with the
// stationary point attached) when any s_hat_i <= 0.
Equilibrium equilibrium_weights(const GreensMatrix& matrix, const GreenTolerances& tol = {});

// exp(-lambda): the outer sectional capacity at the equilibrium divisor,
// which coincides with the Cantor-Rumely capacity in the interior case.
double s_plus_support(const GreensMatrix& matrix, const GreenTolerances& tol = {});

}  // namespace adcap
