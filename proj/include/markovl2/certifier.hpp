#pragma once

#include <optional>
#include <string>

#include "markovl2/newton.hpp"
#include "markovl2/positivity.hpp"

namespace markovl2 {

enum class Side { lower, upper };
const char* to_string(Side s);
Side side_from_string(std::string_view s);

// b_1..b_k and p_1..p_k as polynomials in n with rational-function-of-alpha
// coefficients. Building this is the expensive part; reuse it across calls.
struct SymbolicData {
  int k = 0;
  std::vector<NPoly> b;
  std::vector<NPoly> p;
};
SymbolicData make_symbolic_data(int k);

// One row-leading coefficient of the numerator of f_s, as a polynomial in the
// tuning parameter s. Lower side: A - B s. Upper side: A s^nu - B.
struct SigmaCandidate {
  int row = 0;          // 1-based; the row multiplies n^{2k-row}
  int col = 0;          // leading (alpha+1)-column of the row in the joint expansion
  unsigned nu = 1;      // s-power carried by the leading term (1 on the lower side)
  Rational A, B;
  bool has_zero = false;  // a nonnegative zero exists
  Rational zero_base;     // the zero is zero_base^(1/nu) when has_zero
};

struct SigmaResult {
  AlphaFunction c;
  Rational sigma;
  bool promoted = false;  // true when an irrational zero was covered by a rational one
  std::vector<SigmaCandidate> candidates;
};

// The comparison constant c and the tuning value sigma:
// lower: c = lead(p_k)/lead(p_{k-1}), sigma = min of row zeros of f_s = p_k - c n(n+s(alpha+1)) p_{k-1};
// upper: c = lead(p_k), sigma = max of nonnegative row zeros of f_s = c(n+1)^k (n+s(alpha+1))^k - p_k.
SigmaResult sigma_search(const SymbolicData& sd, Side side);

// Smallest rational >= base^(1/nu) with denominator <= max_den (exact cover of
// an irrational root). base >= 0.
Rational smallest_rational_cover(const Rational& base, unsigned nu, unsigned max_den);

// Integer coefficient matrix of a numerator expansion:
// rows[i-1][j] multiplies n^{2k-i} (alpha+1)^{d-j}, i = 1..2k-1, j = 0..d.
struct CoeffMatrix {
  int k = 0, d = 0;
  std::vector<std::vector<Int>> rows;

  int row_count() const { return 2 * k - 1; }
  AlphaPoly row_poly(int row) const;  // 1-based row as a polynomial in t = alpha+1
  Rational eval(const Rational& n, const Rational& t) const;
};

// f and its decomposition f = (Phi(M) + nfree(t)) / psi with integer M.
// nfree collects the n-free part of the numerator; it is identically zero on
// the lower side and a positive multiple of (alpha+1)^k on the upper side.
struct ExtractedSystem {
  NPoly f;
  CoeffMatrix M;
  AlphaPoly psi;      // in alpha; positive on alpha > -1 (checked by certify)
  AlphaPoly nfree_t;  // in t = alpha + 1; rational coefficients
};
ExtractedSystem extract_system(const SymbolicData& sd, Side side, const AlphaFunction& c,
                               const Rational& sigma);

// Mass-shifting reduction: negative entries are absorbed into the nearest
// positive entry above in the same column, discounted by base^(row distance),
// which only ever lowers Phi for n >= base. Rows whose negatives cannot be
// absorbed are reported; their row polynomials need a direct positivity proof.
struct ReductionResult {
  CoeffMatrix Lambda;
  std::vector<int> residual_rows;  // 1-based, ascending
};
ReductionResult lambda_reduce(const CoeffMatrix& M, int base);

struct ResidualRow {
  int row = 0;
  AlphaPoly poly_t;
  Positivity verdict = Positivity::zero_polynomial;
};
struct BoundaryCheck {
  int n = 0;
  AlphaPoly poly_t;  // numerator of f(n, .) in t
  Positivity verdict = Positivity::zero_polynomial;
};

struct BoundCertificate {
  int k = 0;
  Side side = Side::lower;
  AlphaFunction c;
  Rational sigma;
  bool sigma_promoted = false;
  int base = 0;  // discount base of the reduction; claims hold for n >= base
  int d = 0;
  CoeffMatrix M, Lambda;
  std::vector<ResidualRow> residual_rows;
  std::vector<BoundaryCheck> boundary_checks;  // n = k .. base-1
  bool certified = false;
  std::string failure_reason;

  // construction internals (not serialized; empty on certificates loaded from disk)
  AlphaPoly psi;
  AlphaPoly nfree_t;
  std::vector<SigmaCandidate> sigma_candidates;
};

struct CertifyOptions {
  std::optional<Rational> sigma_override;
  std::optional<int> base_override;
};

// End-to-end construction and machine check of one closed-form bound:
// lower: c_n^2(alpha) >= c(alpha) n (n + sigma (alpha+1))    for n >= k,
// upper: c_n^2(alpha) <= c(alpha)^{1/k} (n+1)(n + sigma(alpha+1)) for n >= k.
BoundCertificate certify(int k, Side side, const CertifyOptions& opts = {});
BoundCertificate certify(const SymbolicData& sd, Side side, const CertifyOptions& opts = {});

struct VerifyViolation {
  int n = 0;
  Rational alpha;
  std::string what;
};
struct VerifyReport {
  long checks = 0;
  std::vector<VerifyViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Independent spot check of a certificate on explicit grids, all exact:
// recomputes f(n, alpha) from the three-term recurrence (no symbolic reuse),
// checks f >= 0 (n >= k), Phi(Lambda) >= 0 and Phi(Lambda) <= Phi(M) (n >= base),
// and, when the construction internals are present, the identity
// psi * f = Phi(M) + nfree.
VerifyReport verify_certificate(const BoundCertificate& cert, const std::vector<int>& ns,
                                const std::vector<Rational>& alphas);

}  // namespace markovl2
