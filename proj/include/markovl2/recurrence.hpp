#pragma once

#include <vector>

#include "markovl2/npolynomial.hpp"

namespace markovl2 {

// Monic three-term recurrence Q_{j+1} = (x - d_j) Q_j - lambda_j^2 Q_{j-1},
// Q_{-1} = 0, Q_0 = 1, for the weight x^alpha e^{-x} derivative system:
//   d_0 = alpha + 1, d_j = 2 + alpha/(j+1) (j >= 1), lambda_j^2 = 1 + alpha/j.
Rational d_coef(int j, const Rational& alpha);
Rational lambda_sq(int j, const Rational& alpha);

struct JacobiMatrix {
  std::vector<Rational> diag;        // d_0 .. d_{n-1}
  std::vector<Rational> offdiag_sq;  // lambda_1^2 .. lambda_{n-1}^2
};
JacobiMatrix jacobi_matrix(int n, const Rational& alpha);

// Q_n(x), exact.
Rational eval_Q(int n, const Rational& alpha, const Rational& x);
// The whole sequence Q_0(x) .. Q_n(x) (Sturm sequence for eigenvalue counts).
std::vector<Rational> eval_Q_sequence(int n, const Rational& alpha, const Rational& x);

// Coefficients b_i of the reversed 0-normalized polynomial:
//   R_n(x) = x^n - b_1 x^{n-1} + b_2 x^{n-2} - ... ,  b_i = A_{i,n}.
struct RnCoefficients {
  int k = 0, n = 0;
  Rational alpha;
  std::vector<Rational> b;  // b[i-1] = b_i for i = 1..k
};
RnCoefficients coeffs_numeric(int k, int n, const Rational& alpha);

// Same values with alpha kept symbolic, at a fixed n.
std::vector<AlphaFunction> coeffs_symbolic_alpha(int k, int n);

// Full table A[i][m] = A_{i,m} for 0 <= i <= k, 0 <= m <= nmax, alpha symbolic.
std::vector<std::vector<AlphaFunction>> coeff_table_symbolic(int k, int nmax);

// b_i as polynomials in n (degree exactly 2i), i = 1..k. Built by exact
// interpolation on integer sample points with two holdout checks; the degree
// bound is raised by 2 and the fit retried (at most 3 times) if a holdout fails.
std::vector<NPoly> coeffs_symbolic(int k);

void require_alpha_above_minus_one(const Rational& alpha);

}  // namespace markovl2
