#pragma once

#include "adcap/rational.hpp"

#include <vector>

namespace adcap {

// The finite set of multi-exponents occurring in a family of polynomials
// in n variables.
struct ExponentSet {
  int n = 0;
  std::vector<std::vector<long long>> points;

  ExponentSet(int variables, std::vector<std::vector<long long>> tuples);
};

// Positive integers (m_1 = 1, m_2, ..., m_n) such that the linear form
// x_1 + sum m_l x_l is injective on the set.  Minimal-lexicographic: each
// m_l is the smallest choice separating every pair of points that agree on
// all later coordinates; the full form is re-verified exhaustively.
std::vector<long long> monomial_exponents(const ExponentSet& sigma);

// The matrix of multiplication by z on a free basis, exact rationals.
struct MultiplicationMatrix {
  int rank = 0;
  std::vector<Rational> entries;  // row-major rank*rank

  MultiplicationMatrix(int r, std::vector<Rational> values);

  const Rational& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * rank + j];
  }
};

// Monic characteristic polynomial det(tI - z), coefficients ascending
// (constant term first, leading 1 last), by the Faddeev-LeVerrier
// recurrence in exact rationals.
std::vector<Rational> char_poly(const MultiplicationMatrix& z);

// Exact evaluation of a polynomial at the matrix, Horner form.
bool poly_annihilates(const std::vector<Rational>& coefficients, const MultiplicationMatrix& z);

// F(z) = 0 exactly for F the characteristic polynomial.
bool cayley_hamilton_check(const MultiplicationMatrix& z);

// Is the leading coefficient a unit of Z, i.e. +-1?  The flag records
// whether the polynomial came from a section not vanishing at infinity;
// over Z both readings agree.
bool leading_unit_check(const std::vector<Rational>& coefficients,
                        bool localized_at_infinity = false);

}  // namespace adcap
