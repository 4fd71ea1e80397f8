#pragma once

#include "markovl2/certifier.hpp"

namespace markovl2::tables {

// Closed-form constants of the two bound families:
//   lower: c_n^2 >= c(alpha) n (n + sigma (alpha+1)),          n >= k
//   upper: c_n^2 <= c(alpha)^{1/k} (n+1)(n + sigma (alpha+1)), n >= k
struct ClosedForm {
  int k = 0;
  AlphaFunction c;
  Rational sigma;
};

const ClosedForm& lower_constant(int k);  // k = 3..6
const ClosedForm& upper_constant(int k);

// Frozen integer matrices (the expansion matrix M and its reduction Lambda)
// for regression, together with the discount base the reduction used.
struct MatrixFixture {
  int k = 0;
  Side side = Side::lower;
  int base = 0;
  CoeffMatrix M, Lambda;
};
const MatrixFixture& matrix_fixture(int k, Side side);

// Limits at alpha = 0: squared lower limit, 2k-th power of the upper limit,
// and their frozen decimal renderings (8 significant digits) plus the
// overestimation factors relative to the exact limit 2/pi.
struct AsymptoticRow {
  int k = 0;
  Rational ell_sq;
  Rational u_pow;
  const char* ell_str;
  const char* u_str;
  const char* factor_lower;
  const char* factor_upper;
};
const std::vector<AsymptoticRow>& asymptotic_table();

}  // namespace markovl2::tables
