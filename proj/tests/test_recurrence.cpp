#include <doctest.h>

#include <vector>

#include "markovl2/recurrence.hpp"

using namespace markovl2;

namespace {

Rational Q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Brute-force coefficient expansion of Q_n in x, independent of the
// coefficient recursion under test.
std::vector<Rational> expand_Q(int n, const Rational& alpha) {
  std::vector<Rational> prev;            // Q_{-1} = 0
  std::vector<Rational> cur{Q(1)};       // Q_0 = 1
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> next(cur.size() + 1, Q(0));
    for (size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];                       // x * Q_j
      next[i] -= d_coef(j, alpha) * cur[i];        // -d_j Q_j
    }
    if (j >= 1)
      for (size_t i = 0; i < prev.size(); ++i) next[i] -= lambda_sq(j, alpha) * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// b_i values read off the brute-force expansion: b_i = (-1)^i [x^i] Q_n / Q_n(0).
std::vector<Rational> brute_b(int k, int n, const Rational& alpha) {
  const std::vector<Rational> q = expand_Q(n, alpha);
  std::vector<Rational> b;
  for (int i = 1; i <= k; ++i) {
    Rational v = q[static_cast<size_t>(i)] / q[0];
    if (i % 2 == 1) v = -v;
    b.push_back(v);
  }
  return b;
}

}  // namespace

TEST_CASE("recurrence coefficients") {
  CHECK(d_coef(0, Q(3)) == Q(4));
  CHECK(d_coef(1, Q(3)) == Q(7, 2));
  CHECK(d_coef(4, Q(0)) == Q(2));
  CHECK(lambda_sq(1, Q(3)) == Q(4));
  CHECK(lambda_sq(3, Q(1, 2)) == Q(7, 6));
}

TEST_CASE("value of Q at zero matches the binomial closed form") {
  for (int n = 0; n <= 7; ++n) {
    for (const Rational& alpha : {Q(0), Q(1), Q(-1, 2), Q(7, 3)}) {
      Rational expected = binom_shifted(alpha, static_cast<unsigned>(n));
      if (n % 2 == 1) expected = -expected;
      CHECK(eval_Q(n, alpha, Q(0)) == expected);
    }
  }
}

TEST_CASE("Q sequence evaluation agrees with brute-force expansion") {
  for (int n = 1; n <= 6; ++n) {
    for (const Rational& alpha : {Q(0), Q(1, 3)}) {
      for (const Rational& x : {Q(0), Q(1), Q(-2, 5), Q(13, 7)}) {
        const auto coeffs = expand_Q(n, alpha);
        Rational direct(0), p(1);
        for (const auto& c : coeffs) {
          direct += c * p;
          p *= x;
        }
        const auto seq = eval_Q_sequence(n, alpha, x);
        CHECK(seq.size() == static_cast<size_t>(n) + 1);
        CHECK(seq.back() == direct);
      }
    }
  }
}

TEST_CASE("jacobi matrix shape and domain") {
  const JacobiMatrix j = jacobi_matrix(4, Q(1));
  CHECK(j.diag.size() == 4);
  CHECK(j.offdiag_sq.size() == 3);
  CHECK(j.diag[0] == Q(2));
  CHECK(j.offdiag_sq[0] == Q(2));
  CHECK_THROWS_AS(jacobi_matrix(3, Q(-1)), std::domain_error);
  CHECK_THROWS_AS(coeffs_numeric(2, 4, Q(-3, 2)), std::domain_error);
}

TEST_CASE("reversed-polynomial coefficients against brute force") {
  for (int n = 1; n <= 8; ++n) {
    for (const Rational& alpha : {Q(0), Q(1), Q(-9, 10), Q(10)}) {
      const auto got = coeffs_numeric(n, n, alpha);
      const auto want = brute_b(n, n, alpha);
      REQUIRE(got.b.size() == want.size());
      for (size_t i = 0; i < want.size(); ++i) CHECK(got.b[i] == want[i]);
    }
  }
}

TEST_CASE("known coefficient values") {
  CHECK(coeffs_numeric(1, 1, Q(0)).b[0] == Q(1));
  CHECK(coeffs_numeric(1, 1, Q(3)).b[0] == Q(1, 4));  // 1/(alpha+1)
  CHECK(coeffs_numeric(2, 2, Q(0)).b == std::vector<Rational>{Q(3), Q(1)});

  // at alpha = 0 the coefficients are binomials: b_i(n) = C(n+i, 2i)
  for (int n = 1; n <= 7; ++n)
    for (int i = 1; i <= n; ++i)
      CHECK(coeffs_numeric(i, n, Q(0)).b[static_cast<size_t>(i) - 1] ==
            binom_shifted(Q(n - i), static_cast<unsigned>(2 * i)));
}

TEST_CASE("symbolic-in-alpha coefficients match numeric ones") {
  const int k = 3, n = 5;
  const auto sym = coeffs_symbolic_alpha(k, n);
  for (const Rational& alpha : {Q(0), Q(2), Q(-1, 2)}) {
    const auto num = coeffs_numeric(k, n, alpha);
    for (int i = 0; i < k; ++i) CHECK(sym[static_cast<size_t>(i)].eval(alpha) == num.b[static_cast<size_t>(i)]);
  }
}

TEST_CASE("symbolic-in-n coefficients") {
  const auto b = coeffs_symbolic(4);
  REQUIRE(b.size() == 4);
  for (int i = 1; i <= 4; ++i) CHECK(b[static_cast<size_t>(i) - 1].degree() == 2 * i);

  for (int n = 4; n <= 9; ++n) {
    for (const Rational& alpha : {Q(0), Q(1), Q(5, 2)}) {
      const auto num = coeffs_numeric(4, n, alpha);
      for (int i = 0; i < 4; ++i) CHECK(b[static_cast<size_t>(i)].eval(Q(n), alpha) == num.b[static_cast<size_t>(i)]);
    }
  }

  // closed form of the first one: b_1 = n (n + 1) / (2 (alpha + 1))
  const NPoly n = NPoly::variable();
  const AlphaFunction one(Q(1));
  const AlphaFunction half_over = one / (Rational(2) * (AlphaFunction::alpha() + one));
  const NPoly expected_b1 = (n * n + n) * half_over;
  CHECK(b[0] == expected_b1);
}
