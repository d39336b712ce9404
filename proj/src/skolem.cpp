#include "adcap/skolem.hpp"

#include "adcap/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace adcap {

ExponentSet::ExponentSet(int variables, std::vector<std::vector<long long>> tuples)
    : n(variables), points(std::move(tuples)) {
  if (n < 1) throw Error(ErrorCode::DomainError, "need at least one variable");
  if (points.empty()) throw Error(ErrorCode::DomainError, "exponent set must be nonempty");
  std::set<std::vector<long long>> seen;
  for (const auto& point : points) {
    if (static_cast<int>(point.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch, "exponent tuple of wrong arity");
    }
    for (long long c : point) {
      if (c < 0) throw Error(ErrorCode::DomainError, "exponents must be nonnegative");
    }
    if (!seen.insert(point).second) {
      throw Error(ErrorCode::DomainError, "exponent tuples must be distinct");
    }
  }
}

std::vector<long long> monomial_exponents(const ExponentSet& sigma) {
  const int n = sigma.n;
  const auto& points = sigma.points;
  std::vector<long long> m(n, 1);

  // Partial form values f_l(x) = x_1 + sum_{j <= l} m_j x_j.
  std::vector<long long> partial(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) partial[i] = points[i][0];

  for (int l = 1; l < n; ++l) {
    // Pairs agreeing on all coordinates after l get no further separation,
    // so they must already be split by the form through coordinate l.
    std::map<std::vector<long long>, std::vector<std::size_t>> fibers;
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<long long> suffix(points[i].begin() + l + 1, points[i].end());
      fibers[std::move(suffix)].push_back(i);
    }
    for (long long candidate = 1;; ++candidate) {
      bool injective = true;
      for (const auto& [suffix, members] : fibers) {
        std::set<long long> values;
        for (std::size_t i : members) {
          if (!values.insert(partial[i] + candidate * points[i][l]).second) {
            injective = false;
            break;
          }
        }
        if (!injective) break;
      }
      if (injective) {
        m[l] = candidate;
        break;
      }
    }
    for (std::size_t i = 0; i < points.size(); ++i) partial[i] += m[l] * points[i][l];
  }

  // partial now holds the full form; confirm injectivity exhaustively.
  std::set<long long> images(partial.begin(), partial.end());
  if (images.size() != points.size()) {
    throw Error(ErrorCode::NumericFailure, "selected form failed the exhaustive check");
  }
  return m;
}

MultiplicationMatrix::MultiplicationMatrix(int r, std::vector<Rational> values)
    : rank(r), entries(std::move(values)) {
  if (rank < 1) throw Error(ErrorCode::DomainError, "rank must be positive");
  if (entries.size() != static_cast<std::size_t>(rank) * rank) {
    throw Error(ErrorCode::DimensionMismatch, "entries are not rank*rank");
  }
}

namespace {

using RatMat = std::vector<Rational>;

RatMat mat_mul(int n, const RatMat& a, const RatMat& b) {
  RatMat c(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Rational& aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        c[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
      }
    }
  }
  return c;
}

void add_scalar_diag(int n, RatMat* a, const Rational& c) {
  for (int i = 0; i < n; ++i) (*a)[static_cast<std::size_t>(i) * n + i] += c;
}

Rational trace(int n, const RatMat& a) {
  Rational t(0);
  for (int i = 0; i < n; ++i) t += a[static_cast<std::size_t>(i) * n + i];
  return t;
}

RatMat identity(int n) {
  RatMat id(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = 1;
  return id;
}

}  // namespace

std::vector<Rational> char_poly(const MultiplicationMatrix& z) {
  const int r = z.rank;
  std::vector<Rational> coefficients(r + 1, Rational(0));
  coefficients[r] = 1;

  RatMat m = identity(r);
  for (int k = 1; k <= r; ++k) {
    RatMat am = mat_mul(r, z.entries, m);
    Rational c = -trace(r, am) / k;
    coefficients[r - k] = c;
    m = std::move(am);
    add_scalar_diag(r, &m, c);
  }
  return coefficients;
}

bool poly_annihilates(const std::vector<Rational>& coefficients, const MultiplicationMatrix& z) {
  if (coefficients.empty()) throw Error(ErrorCode::DomainError, "empty polynomial");
  const int r = z.rank;
  RatMat acc(static_cast<std::size_t>(r) * r, Rational(0));
  add_scalar_diag(r, &acc, coefficients.back());
  for (std::size_t k = coefficients.size() - 1; k-- > 0;) {
    acc = mat_mul(r, acc, z.entries);
    add_scalar_diag(r, &acc, coefficients[k]);
  }
  for (const Rational& entry : acc) {
    if (entry != 0) return false;
  }
  return true;
}

bool cayley_hamilton_check(const MultiplicationMatrix& z) {
  return poly_annihilates(char_poly(z), z);
}

bool leading_unit_check(const std::vector<Rational>& coefficients, bool /*localized_at_infinity*/) {
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    if (coefficients[k] != 0) return coefficients[k] == 1 || coefficients[k] == -1;
  }
  throw Error(ErrorCode::DomainError, "zero polynomial");
}

}  // namespace adcap
