#include "markovl2/recurrence.hpp"

#include <stdexcept>

namespace markovl2 {

void require_alpha_above_minus_one(const Rational& alpha) {
  if (alpha <= -1) throw std::domain_error("alpha must satisfy alpha > -1, got " + to_string(alpha));
}

Rational d_coef(int j, const Rational& alpha) {
  if (j < 0) throw std::invalid_argument("negative recurrence index");
  if (j == 0) return alpha + 1;
  return Rational(2) + alpha / Rational(j + 1);
}

Rational lambda_sq(int j, const Rational& alpha) {
  if (j < 1) throw std::invalid_argument("lambda_j^2 defined for j >= 1");
  return Rational(1) + alpha / Rational(j);
}

JacobiMatrix jacobi_matrix(int n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("matrix order must be >= 1");
  require_alpha_above_minus_one(alpha);
  JacobiMatrix J;
  J.diag.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) J.diag.push_back(d_coef(j, alpha));
  J.offdiag_sq.reserve(static_cast<size_t>(n - 1));
  for (int j = 1; j < n; ++j) J.offdiag_sq.push_back(lambda_sq(j, alpha));
  return J;
}

std::vector<Rational> eval_Q_sequence(int n, const Rational& alpha, const Rational& x) {
  if (n < 0) throw std::invalid_argument("negative polynomial degree");
  std::vector<Rational> q;
  q.reserve(static_cast<size_t>(n) + 1);
  q.push_back(Rational(1));
  if (n == 0) return q;
  q.push_back(x - d_coef(0, alpha));
  for (int j = 1; j < n; ++j)
    q.push_back((x - d_coef(j, alpha)) * q[static_cast<size_t>(j)] -
                lambda_sq(j, alpha) * q[static_cast<size_t>(j) - 1]);
  return q;
}

Rational eval_Q(int n, const Rational& alpha, const Rational& x) {
  return eval_Q_sequence(n, alpha, x).back();
}

namespace {

// A[i][m] = coefficient of x^i in the 0-normalized degree-m polynomial, via
//   D_{i,m+1} = (m+1)/(m+alpha+1) * (D_{i,m} + A_{i-1,m}),  D_{i,i-1} = 0,
//   A_{i,m} = A_{i,m-1} + D_{i,m},                          A_{i,i-1} = 0.
// T is Rational (alpha fixed) or AlphaFunction (alpha symbolic).
template <class T>
std::vector<std::vector<T>> coeff_table(int k, int nmax, const T& alpha) {
  std::vector<std::vector<T>> A(static_cast<size_t>(k) + 1,
                                std::vector<T>(static_cast<size_t>(nmax) + 1));
  for (int m = 0; m <= nmax; ++m) A[0][static_cast<size_t>(m)] = T(Rational(1));
  for (int i = 1; i <= k; ++i) {
    T D{};
    for (int m = i - 1; m < nmax; ++m) {
      D = (D + A[static_cast<size_t>(i) - 1][static_cast<size_t>(m)]) *
          (T(Rational(m + 1)) / (alpha + T(Rational(m + 1))));
      A[static_cast<size_t>(i)][static_cast<size_t>(m) + 1] =
          A[static_cast<size_t>(i)][static_cast<size_t>(m)] + D;
    }
  }
  return A;
}

}  // namespace

RnCoefficients coeffs_numeric(int k, int n, const Rational& alpha) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < k) throw std::invalid_argument("need n >= k");
  require_alpha_above_minus_one(alpha);
  auto A = coeff_table<Rational>(k, n, alpha);
  RnCoefficients out;
  out.k = k;
  out.n = n;
  out.alpha = alpha;
  out.b.reserve(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) out.b.push_back(A[static_cast<size_t>(i)][static_cast<size_t>(n)]);
  return out;
}

std::vector<std::vector<AlphaFunction>> coeff_table_symbolic(int k, int nmax) {
  if (k < 0 || nmax < 0) throw std::invalid_argument("bad table size");
  return coeff_table<AlphaFunction>(k, nmax, AlphaFunction::alpha());
}

std::vector<AlphaFunction> coeffs_symbolic_alpha(int k, int n) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < k) throw std::invalid_argument("need n >= k");
  auto A = coeff_table_symbolic(k, n);
  std::vector<AlphaFunction> out;
  out.reserve(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) out.push_back(A[static_cast<size_t>(i)][static_cast<size_t>(n)]);
  return out;
}

std::vector<NPoly> coeffs_symbolic(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int max_retries = 3;
  // Worst case sample index: i + (2i + 2*max_retries) + 2 holdouts.
  const int nmax = 3 * k + 2 * max_retries + 2;
  auto A = coeff_table_symbolic(k, nmax);

  std::vector<NPoly> out;
  out.reserve(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) {
    int bound = 2 * i;
    for (int attempt = 0;; ++attempt) {
      std::vector<std::pair<Rational, AlphaFunction>> samples;
      for (int n = i; n <= i + bound; ++n)
        samples.emplace_back(Rational(n), A[static_cast<size_t>(i)][static_cast<size_t>(n)]);
      try {
        NPoly p = interpolate_in_n(samples, bound);
        // Holdout validation at the next two integers.
        for (int v = i + bound + 1; v <= i + bound + 2; ++v)
          if (!(p.eval_n(Rational(v)) == A[static_cast<size_t>(i)][static_cast<size_t>(v)]))
            throw std::invalid_argument("holdout mismatch");
        out.push_back(std::move(p));
        break;
      } catch (const std::invalid_argument&) {
        if (attempt == max_retries)
          throw std::runtime_error("coefficient interpolation failed for i = " +
                                   std::to_string(i));
        bound += 2;
      }
    }
  }
  return out;
}

}  // namespace markovl2
