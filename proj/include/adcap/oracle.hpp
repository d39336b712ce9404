#pragma once

#include "adcap/adelic.hpp"
#include "adcap/capacity.hpp"
#include "adcap/game.hpp"
#include "adcap/green.hpp"

#include <utility>
#include <vector>

namespace adcap {
namespace oracle {

// Brute-force cross-checks, deliberately independent of the main code
// paths: lattice enumeration instead of linear algebra, closed forms
// instead of LPs, long double instead of double.  Desk scale only.

struct GridSpec {
  int dimension = 1;   // capped at 4
  double step = 1e-3;  // in (0, 1]

  GridSpec(int dim, double grid_step);
};

struct GridMax {
  double value = 0.0;
  std::vector<double> argmax;
};

// Max of s^t G s over the simplex lattice {k/N : sum k = N}, N = round(1/step).
// Deterministic lexicographic iteration; ties keep the first (lexicographically
// smallest) argmax.
GridMax grid_max_quadratic(const GreensMatrix& matrix, const GridSpec& spec);

// Saddle value if a pure saddle exists, else (ad - bc)/(a + d - b - c).
double game_value_2x2(const GameMatrix& game);

// Lattice bounds max_p min_j (p'G)_j <= Val(G) <= min_q max_i (Gq)_i,
// each within one Lipschitz step of Val.  n <= 3.
std::pair<double, double> game_value_grid_bounds(const GameMatrix& game, double step);

// Long double recomputation of the closed-form capacities.
long double polydisk_capacity_extended(int d, const RadiusAssignment& radii);
long double pullback_capacity_extended(const PullbackCandidate& candidate);

}  // namespace oracle
}  // namespace adcap
