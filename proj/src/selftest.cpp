#include "adcap/selftest.hpp"

#include "adcap/adelic.hpp"
#include "adcap/capacity.hpp"
#include "adcap/errors.hpp"
#include "adcap/fekete.hpp"
#include "adcap/game.hpp"
#include "adcap/green.hpp"
#include "adcap/oracle.hpp"
#include "adcap/skolem.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace adcap {
namespace selftest {

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

constexpr int kPrimePool[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

std::vector<int> sample_primes(Rng& rng, int count) {
  std::vector<int> pool(std::begin(kPrimePool), std::end(kPrimePool));
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Radii with up to max_places finite support places and all values in
// [1e-3, 1e3]; when target_log_norm is finite the archimedean value is
// chosen to hit it.
RadiusAssignment random_radii(Rng& rng, int dimension, int max_places,
                              double target_log_norm = std::nan("")) {
  RadiusAssignment radii(dimension);
  int places = static_cast<int>(uniform_int(rng, 0, max_places));
  double finite_log = 0.0;
  for (int p : sample_primes(rng, places)) {
    Rational value(uniform_int(rng, 1, 1000), uniform_int(rng, 1, 1000));
    if (value == 1) value = Rational(2);
    radii.set_finite(p, value);
    finite_log += log_rational(value);
  }
  double arch = std::isnan(target_log_norm)
                    ? std::exp(uniform(rng, std::log(1e-3), std::log(1e3)))
                    : std::exp(target_log_norm - finite_log);
  radii.set_archimedean(arch);
  return radii;
}

std::string format_worst(double worst, const char* label) {
  std::ostringstream out;
  out << label << " " << worst;
  return out.str();
}

struct Criterion {
  int index;
  const char* name;
  bool (*run)(std::string* detail);
};

// --- 1 -----------------------------------------------------------------

bool criterion_counter_fixture(std::string* detail) {
  auto start = Clock::now();
  GreensMatrix matrix(1, {std::log(2.0)});
  WeightVector weights{{1.0}, WeightVector::Normalization::Divisor};
  double s_gamma = sectional_capacity_from_weights(matrix, weights);
  double gamma_cr = cantor_rumely_capacity(matrix);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::ostringstream out;
  out << "S_gamma=" << s_gamma << " gamma_CR=" << gamma_cr << " in " << ms << " ms";
  *detail = out.str();
  return std::abs(s_gamma - 0.5) <= 1e-12 && std::abs(gamma_cr - 0.5) <= 1e-12 && ms < 10.0;
}

// --- 2 -----------------------------------------------------------------

bool criterion_polydisk_formula(std::string* detail) {
  Rng rng(0xADCA0002);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    int d = static_cast<int>(uniform_int(rng, 1, 5));
    RadiusAssignment radii = random_radii(rng, d, 6);
    long double reference = oracle::polydisk_capacity_extended(d, radii);
    long double value = polydisk_sectional_capacity(d, radii);
    double rel = static_cast<double>(fabsl(value / reference - 1.0L));
    worst = std::max(worst, rel);
  }
  *detail = format_worst(worst, "worst rel err over 1000 polydisks:");
  return worst <= 1e-12;
}

// --- 3 -----------------------------------------------------------------

bool criterion_curve_identity(std::string* detail) {
  Rng rng(0xADCA0003);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    long long degree = uniform_int(rng, 1, 50);
    std::vector<long long> divisors;
    for (long long m = 1; m <= degree; ++m) {
      if (degree % m == 0) divisors.push_back(m);
    }
    long long multiplicity = divisors[uniform_int(rng, 0, divisors.size() - 1)];
    double target = uniform(rng, std::log(1e-3), std::log(1e3));
    RadiusAssignment radii = random_radii(rng, 1, 6, target);
    CurveIdentityResult check = curve_pullback_identity_check(degree, multiplicity, radii);
    if (!check.pass) {
      *detail = "identity failed at degree " + std::to_string(degree);
      return false;
    }
    worst = std::max(worst, std::abs(check.lhs - check.rhs) / std::abs(check.rhs));
  }
  *detail = format_worst(worst, "worst rel err over 1000 admissible triples:");
  return worst <= 1e-12;
}

// --- 4 -----------------------------------------------------------------

bool criterion_equilibrium_suite(std::string* detail) {
  Rng rng(0xADCA0004);
  auto start = Clock::now();
  double worst_component = 0.0, worst_val = 0.0, worst_grid = 0.0, worst_cap = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(uniform_int(rng, 1, 4));
    GreensMatrix matrix(1, {-1.0});
    Equilibrium eq;
    bool found = false;
    for (int attempt = 0; attempt < 500 && !found; ++attempt) {
      std::vector<double> a(static_cast<std::size_t>(n) * n);
      for (double& x : a) x = uniform(rng, -1.0, 1.0);
      std::vector<double> g(static_cast<std::size_t>(n) * n, 0.0);
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
      if (!is_negative_definite(candidate)) continue;
      try {
        Equilibrium attempt_eq = equilibrium_weights(candidate);
        double min_component = *std::min_element(attempt_eq.s_hat.values.begin(),
                                                 attempt_eq.s_hat.values.end());
        if (min_component < 0.02) continue;
        matrix = std::move(candidate);
        eq = std::move(attempt_eq);
        found = true;
      } catch (const Error&) {
        continue;
      }
    }
    if (!found) {
      *detail = "failed to generate an interior-equilibrium matrix";
      return false;
    }

    for (int i = 0; i < matrix.size(); ++i) {
      double row = 0.0;
      for (int j = 0; j < matrix.size(); ++j) row += matrix.at(i, j) * eq.s_hat.values[j];
      worst_component = std::max(worst_component, std::abs(row - eq.lambda));
    }
    double val = game_value(GameMatrix(matrix.size(), matrix.entries())).value;
    worst_val = std::max(worst_val, std::abs(eq.lambda - val));
    oracle::GridMax grid =
        oracle::grid_max_quadratic(matrix, oracle::GridSpec(matrix.size(), 1e-3));
    if (grid.value > eq.lambda + 1e-12) {
      *detail = "grid maximum exceeded the interior maximum";
      return false;
    }
    worst_grid = std::max(worst_grid, std::abs(eq.lambda - grid.value));
    double cap_rel = std::abs(s_plus_support(matrix) / cantor_rumely_capacity(matrix) - 1.0);
    worst_cap = std::max(worst_cap, cap_rel);
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream out;
  out << "worst: components " << worst_component << ", |lambda-Val| " << worst_val
      << ", grid gap " << worst_grid << ", capacity rel " << worst_cap << ", " << seconds << " s";
  *detail = out.str();
  return worst_component <= 1e-9 && worst_val <= 1e-6 && worst_grid <= 2e-3 &&
         worst_cap <= 1e-6 && seconds < 60.0;
}

// --- 5 -----------------------------------------------------------------

bool criterion_game_engine(std::string* detail) {
  Rng rng(0xADCA0005);
  double worst_closed = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> entries(4);
    for (double& e : entries) e = uniform(rng, -10.0, 10.0);
    GameMatrix game(2, entries);
    double lp = game_value(game).value;
    double closed = oracle::game_value_2x2(game);
    worst_closed = std::max(worst_closed, std::abs(lp - closed));
  }
  double worst_shift = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = static_cast<int>(uniform_int(rng, 1, 6));
    std::vector<double> entries(static_cast<std::size_t>(n) * n);
    for (double& e : entries) e = uniform(rng, -10.0, 10.0);
    GameMatrix game(n, entries);
    double c = uniform(rng, -10.0, 10.0);
    double gap = std::abs(shifted_value(game, c) - game_value(game).value - c);
    worst_shift = std::max(worst_shift, gap);
  }
  std::ostringstream out;
  out << "worst closed-form gap " << worst_closed << ", worst shift gap " << worst_shift;
  *detail = out.str();
  return worst_closed <= 1e-8 && worst_shift <= 1e-8;
}

// --- 6 -----------------------------------------------------------------

bool criterion_compare_harness(std::string* detail) {
  Rng rng(0xADCA0006);
  double worst_eq = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    int d = static_cast<int>(uniform_int(rng, 1, 3));
    MorphismDescriptor morphism(d, uniform_int(rng, 1, 20), uniform_int(rng, 1, 3));
    double target = uniform(rng, std::log(1e-2), std::log(1e2));
    RadiusAssignment radii = random_radii(rng, d, 4, target);
    PullbackCandidate generator(morphism, radii);
    std::vector<PullbackCandidate> candidates;
    int extras = static_cast<int>(uniform_int(rng, 0, 3));
    for (int j = 0; j < extras; ++j) {
      RadiusAssignment smaller = radii;
      smaller.set_archimedean(radii.archimedean() * uniform(rng, 0.2, 0.9));
      candidates.emplace_back(morphism, smaller);
    }
    candidates.push_back(generator);
    double fm = finite_morphism_capacity_lower_bound(
        candidates, [](const PullbackCandidate&) { return true; });
    double sectional = pullback_sectional_capacity(generator);
    if (!theorem_compare_check(fm, sectional)) {
      *detail = "bound violated on an equality scenario";
      return false;
    }
    worst_eq = std::max(worst_eq, std::abs(fm - sectional) / sectional);
  }
  for (int trial = 0; trial < 100; ++trial) {
    int d = static_cast<int>(uniform_int(rng, 1, 3));
    MorphismDescriptor morphism(d, uniform_int(rng, 1, 20), uniform_int(rng, 1, 3));
    double target = uniform(rng, std::log(1e-2), std::log(1e2));
    RadiusAssignment radii = random_radii(rng, d, 4, target);
    PullbackCandidate generator(morphism, radii);
    std::vector<PullbackCandidate> candidates;
    int count = static_cast<int>(uniform_int(rng, 0, 3));
    for (int j = 0; j < count; ++j) {
      RadiusAssignment smaller = radii;
      smaller.set_archimedean(radii.archimedean() * uniform(rng, 0.2, 0.9));
      candidates.emplace_back(morphism, smaller);
    }
    double fm = finite_morphism_capacity_lower_bound(
        candidates, [](const PullbackCandidate&) { return true; });
    double sectional = pullback_sectional_capacity(generator);
    if (!theorem_compare_check(fm, sectional) || fm > sectional * (1.0 + 1e-12)) {
      *detail = "inequality violated on a strict-subset scenario";
      return false;
    }
  }
  *detail = format_worst(worst_eq, "worst equality rel err:");
  return worst_eq <= 1e-12;
}

// --- 7 -----------------------------------------------------------------

ExponentSet random_exponent_set(Rng& rng, int n, int size) {
  if (n == 1) size = std::min(size, 21);  // coordinates range over 0..20
  std::set<std::vector<long long>> points;
  while (static_cast<int>(points.size()) < size) {
    std::vector<long long> point(n);
    for (long long& c : point) c = uniform_int(rng, 0, 20);
    points.insert(std::move(point));
  }
  return ExponentSet(n, std::vector<std::vector<long long>>(points.begin(), points.end()));
}

bool criterion_injective_form(std::string* detail) {
  Rng rng(0xADCA0007);
  for (int trial = 0; trial < 500; ++trial) {
    int n = static_cast<int>(uniform_int(rng, 1, 4));
    int size = static_cast<int>(uniform_int(rng, 1, 25));
    ExponentSet sigma = random_exponent_set(rng, n, size);
    std::vector<long long> m = monomial_exponents(sigma);
    std::set<long long> images;
    for (const auto& point : sigma.points) {
      long long image = 0;
      for (int l = 0; l < n; ++l) image += m[l] * point[l];
      if (!images.insert(image).second) {
        *detail = "collision at trial " + std::to_string(trial);
        return false;
      }
    }
    if (m[0] != 1) {
      *detail = "m_1 != 1";
      return false;
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(uniform_int(rng, 2, 4));
    int size = static_cast<int>(uniform_int(rng, 2, 15));
    ExponentSet sigma = random_exponent_set(rng, n, size);
    std::vector<long long> coefficients;
    for (std::size_t i = 0; i < sigma.points.size(); ++i) {
      long long c = uniform_int(rng, 1, 9) * (uniform_int(rng, 0, 1) ? 1 : -1);
      coefficients.push_back(c);
    }
    std::vector<long long> m = monomial_exponents(sigma);
    // Substitute x_l -> t^{m_l}: term i lands in degree <m, point_i>.
    std::set<long long> degrees;
    for (const auto& point : sigma.points) {
      long long degree = 0;
      for (int l = 0; l < n; ++l) degree += m[l] * point[l];
      if (!degrees.insert(degree).second) {
        *detail = "substituted polynomial collapsed terms";
        return false;
      }
    }
    // Distinct degrees: the coefficient multiset is preserved verbatim.
    std::vector<long long> before = coefficients, after = coefficients;
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    if (before != after) {
      *detail = "coefficient multiset changed";
      return false;
    }
  }
  *detail = "500 injectivity cases, 100 coefficient-multiset cases";
  return true;
}

// --- 8 -----------------------------------------------------------------

bool criterion_cayley_hamilton(std::string* detail) {
  Rng rng(0xADCA0008);
  for (int trial = 0; trial < 200; ++trial) {
    int r = static_cast<int>(uniform_int(rng, 1, 6));
    std::vector<Rational> entries;
    for (int i = 0; i < r * r; ++i) {
      entries.emplace_back(uniform_int(rng, -9, 9), uniform_int(rng, 1, 9));
    }
    MultiplicationMatrix z(r, entries);
    if (!cayley_hamilton_check(z)) {
      *detail = "F(z) != 0 at trial " + std::to_string(trial);
      return false;
    }
  }
  // Negative control: perturbing the constant term must break annihilation.
  MultiplicationMatrix unit(1, {Rational(1)});
  std::vector<Rational> perturbed = char_poly(unit);
  perturbed[0] += 1;
  if (poly_annihilates(perturbed, unit)) {
    *detail = "negative control passed unexpectedly";
    return false;
  }
  *detail = "200 exact annihilations, negative control rejected";
  return true;
}

// --- 9 -----------------------------------------------------------------

bool criterion_product_formula(std::string* detail) {
  Rng rng(0xADCA0009);
  for (int trial = 0; trial < 1000; ++trial) {
    long long num = 0;
    while (num == 0) num = uniform_int(rng, -1000000, 1000000);
    long long den = uniform_int(rng, 1, 1000000);
    Rational q(num, den);
    if (product_formula_check(q) != 1) {
      *detail = "product formula failed for " + rational_to_string(q);
      return false;
    }
  }
  *detail = "1000 rationals, all exactly 1";
  return true;
}

// --- 10 ----------------------------------------------------------------

bool criterion_fekete_witness(std::string* detail) {
  Rng rng(0xADCA000A);
  long long max_n = 0;
  for (int trial = 0; trial < 200; ++trial) {
    RadiusAssignment radii(1);
    do {
      int d = static_cast<int>(uniform_int(rng, 1, 3));
      radii = random_radii(rng, d, 6);
    } while (!(radii.log_norm() > std::log1p(1e-6)));

    std::optional<WitnessScaling> scaling_opt;
    try {
      scaling_opt = find_scaling(radii);
    } catch (const Error& e) {
      *detail = std::string("find_scaling failed: ") + e.what();
      return false;
    }
    const WitnessScaling& scaling = *scaling_opt;
    max_n = std::max(max_n, scaling.root_exponent);

    for (const auto& [p, value] : radii.finite_support()) {
      if (prime_power_vs_rational_power(p, scaling.alpha.exponent_of(p), value,
                                        scaling.root_exponent) > 0) {
        *detail = "scaled radius below 1 at a finite place";
        return false;
      }
    }
    if (!(scaling.scaled_archimedean() > 1.0)) {
      *detail = "archimedean scaled radius not above 1";
      return false;
    }
    std::vector<WitnessPoint> points = enumerate_witnesses(scaling, 10);
    for (const auto& point : points) {
      if (!verify_point(point, radii)) {
        *detail = "witness point failed verification";
        return false;
      }
    }
  }
  *detail = "200 scalings (max n " + std::to_string(max_n) + "), 2000 witness points verified";
  return true;
}

constexpr Criterion kCriteria[] = {
    {1, "counter-fixture", criterion_counter_fixture},
    {2, "polydisk-formula", criterion_polydisk_formula},
    {3, "curve-pullback-identity", criterion_curve_identity},
    {4, "equilibrium-suite", criterion_equilibrium_suite},
    {5, "game-engine", criterion_game_engine},
    {6, "compare-harness", criterion_compare_harness},
    {7, "injective-form", criterion_injective_form},
    {8, "cayley-hamilton", criterion_cayley_hamilton},
    {9, "product-formula", criterion_product_formula},
    {10, "fekete-witness", criterion_fekete_witness},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* live) {
  std::vector<CriterionResult> results;
  for (const Criterion& criterion : kCriteria) {
    CriterionResult result;
    result.index = criterion.index;
    result.name = criterion.name;
    auto start = Clock::now();
    try {
      result.passed = criterion.run(&result.detail);
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    result.milliseconds = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (live) {
      (*live) << (result.passed ? "PASS" : "FAIL") << "  " << result.index << "  " << result.name
              << "  (" << result.detail << ")\n";
      live->flush();
    }
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& result : results) {
    if (!result.passed) return false;
  }
  return true;
}

}  // namespace selftest
}  // namespace adcap
