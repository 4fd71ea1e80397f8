#include <doctest.h>

#include "markovl2/certificate_json.hpp"
#include "markovl2/certifier.hpp"
#include "markovl2/reference_tables.hpp"

using namespace markovl2;

namespace {

Rational Q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

void check_against_tables(const BoundCertificate& cert, Side side) {
  const tables::ClosedForm& cf =
      side == Side::lower ? tables::lower_constant(cert.k) : tables::upper_constant(cert.k);
  CHECK(cert.certified);
  CHECK(cert.failure_reason.empty());
  CHECK(cert.c == cf.c);
  CHECK(cert.sigma == cf.sigma);
}

void check_matrix_fixture(const BoundCertificate& cert, Side side) {
  const tables::MatrixFixture& fx = tables::matrix_fixture(cert.k, side);
  REQUIRE(cert.M.rows.size() == fx.M.rows.size());
  REQUIRE(cert.Lambda.rows.size() == fx.Lambda.rows.size());
  CHECK(cert.base == fx.base);
  CHECK(cert.M.d == fx.M.d);
  for (size_t i = 0; i < fx.M.rows.size(); ++i) {
    CHECK(cert.M.rows[i] == fx.M.rows[i]);
    CHECK(cert.Lambda.rows[i] == fx.Lambda.rows[i]);
  }
}

}  // namespace

TEST_CASE("certify k=3 both sides: constants, matrices, residual, boundary") {
  SymbolicData sd = make_symbolic_data(3);

  BoundCertificate lo = certify(sd, Side::lower);
  check_against_tables(lo, Side::lower);
  check_matrix_fixture(lo, Side::lower);
  CHECK(lo.base == 4);
  CHECK(lo.sigma == Q(3, 8));
  CHECK_FALSE(lo.sigma_promoted);

  // the one row the reduction cannot clear, proven nonnegative directly
  REQUIRE(lo.residual_rows.size() == 1);
  CHECK(lo.residual_rows[0].row == 1);
  AlphaPoly expected({Q(360), Q(225), Q(-4), Q(4)}, Basis::alpha_plus_one);
  CHECK(lo.residual_rows[0].poly_t == expected);
  CHECK(lo.residual_rows[0].verdict == Positivity::proven_nonnegative);

  // the reduction discounts by base 4, so n = 3 needs its own check
  REQUIRE(lo.boundary_checks.size() == 1);
  CHECK(lo.boundary_checks[0].n == 3);
  CHECK(lo.boundary_checks[0].verdict == Positivity::proven_nonnegative);

  BoundCertificate up = certify(sd, Side::upper);
  check_against_tables(up, Side::upper);
  check_matrix_fixture(up, Side::upper);
  CHECK(up.base == 3);
  CHECK(up.sigma == Q(2, 5));
  CHECK(up.boundary_checks.empty());
}

TEST_CASE("certify k=4 both sides matches printed matrices") {
  SymbolicData sd = make_symbolic_data(4);
  BoundCertificate lo = certify(sd, Side::lower);
  check_against_tables(lo, Side::lower);
  check_matrix_fixture(lo, Side::lower);
  CHECK(lo.sigma == Q(8, 25));

  BoundCertificate up = certify(sd, Side::upper);
  check_against_tables(up, Side::upper);
  check_matrix_fixture(up, Side::upper);
  CHECK(up.sigma == Q(3, 7));
}

TEST_CASE("certify k=5 both sides matches printed matrices") {
  SymbolicData sd = make_symbolic_data(5);
  BoundCertificate lo = certify(sd, Side::lower);
  check_against_tables(lo, Side::lower);
  check_matrix_fixture(lo, Side::lower);
  CHECK(lo.sigma == Q(25, 84));

  BoundCertificate up = certify(sd, Side::upper);
  check_against_tables(up, Side::upper);
  check_matrix_fixture(up, Side::upper);
  CHECK(up.sigma == Q(4, 9));
}

TEST_CASE("certify k=6 both sides matches printed matrices") {
  SymbolicData sd = make_symbolic_data(6);
  BoundCertificate lo = certify(sd, Side::lower);
  check_against_tables(lo, Side::lower);
  check_matrix_fixture(lo, Side::lower);
  CHECK(lo.sigma == Q(2, 7));

  BoundCertificate up = certify(sd, Side::upper);
  check_against_tables(up, Side::upper);
  check_matrix_fixture(up, Side::upper);
  CHECK(up.sigma == Q(5, 11));
}

TEST_CASE("oversized sigma override fails row positivity, not crash") {
  SymbolicData sd = make_symbolic_data(3);
  CertifyOptions opts;
  opts.sigma_override = Q(1, 2);
  BoundCertificate cert = certify(sd, Side::lower, opts);
  CHECK_FALSE(cert.certified);
  CHECK_FALSE(cert.failure_reason.empty());
}

TEST_CASE("smallest_rational_cover: minimal covering fraction") {
  // exact roots pass through unchanged
  CHECK(smallest_rational_cover(Q(9, 4), 2, 64) == Q(3, 2));
  CHECK(smallest_rational_cover(Q(0), 3, 64) == Q(0));

  // sqrt(2): the best denominator <= 64 cover from above
  Rational c = smallest_rational_cover(Q(2), 2, 64);
  CHECK(c * c >= 2);
  for (long q = 1; q <= 64; ++q) {
    for (long p = 1; p <= 2 * q; ++p) {
      Rational cand = Q(p, q);
      if (cand * cand >= 2) {
        CHECK(cand >= c);
        break;
      }
    }
  }
}

TEST_CASE("lambda_reduce leaves nonnegative matrices alone") {
  CoeffMatrix m;
  m.k = 2;
  m.d = 1;
  m.rows = {{Int(1), Int(0)}, {Int(3), Int(2)}, {Int(0), Int(5)}};
  ReductionResult r = lambda_reduce(m, 2);
  CHECK(r.residual_rows.empty());
  CHECK(r.Lambda.rows == m.rows);
}

TEST_CASE("lambda_reduce absorbs a negative into the row above") {
  // column 0: -6 at distance 1 below a 4, base 2: 4 + floor(-6/2) = 1
  CoeffMatrix m;
  m.k = 2;
  m.d = 0;
  m.rows = {{Int(4)}, {Int(-6)}, {Int(9)}};
  ReductionResult r = lambda_reduce(m, 2);
  CHECK(r.residual_rows.empty());
  CHECK(r.Lambda.rows[0][0] == 1);
  CHECK(r.Lambda.rows[1][0] == 0);
  CHECK(r.Lambda.rows[2][0] == 9);
}

TEST_CASE("CoeffMatrix row_poly and eval agree") {
  CoeffMatrix m;
  m.k = 2;
  m.d = 2;
  m.rows = {{Int(1), Int(-2), Int(3)}, {Int(0), Int(4), Int(0)}, {Int(-5), Int(0), Int(7)}};
  Rational n(9, 2), t(3, 5);
  n.canonicalize();
  t.canonicalize();
  Rational direct(0);
  for (int i = 1; i <= m.row_count(); ++i)
    direct += m.row_poly(i).eval(t) * rational_pow(n, static_cast<unsigned>(2 * m.k - i));
  CHECK(direct == m.eval(n, t));
}

TEST_CASE("verify_certificate spot checks certified bounds on explicit grids") {
  SymbolicData sd = make_symbolic_data(3);
  BoundCertificate lo = certify(sd, Side::lower);
  VerifyReport rep = verify_certificate(lo, {3, 4, 5, 8, 13}, {Q(0), Q(1), Q(-1, 2), Q(10)});
  CHECK(rep.ok());
  CHECK(rep.checks > 0);

  BoundCertificate up = certify(sd, Side::upper);
  VerifyReport rep2 = verify_certificate(up, {3, 4, 7}, {Q(0), Q(-9, 10), Q(7, 3)});
  CHECK(rep2.ok());
}

TEST_CASE("certificate json round trip is stable and verifiable") {
  SymbolicData sd = make_symbolic_data(3);
  BoundCertificate cert = certify(sd, Side::lower);
  std::string text = certificate_to_json(cert);
  BoundCertificate back = certificate_from_json(text);
  CHECK(certificate_to_json(back) == text);
  CHECK(back.k == cert.k);
  CHECK(back.side == cert.side);
  CHECK(back.c == cert.c);
  CHECK(back.sigma == cert.sigma);
  CHECK(back.base == cert.base);
  CHECK(back.M.rows == cert.M.rows);
  CHECK(back.Lambda.rows == cert.Lambda.rows);
  CHECK(back.certified);

  // construction internals are gone after the round trip; verification still works
  CHECK(back.psi.is_zero());
  VerifyReport rep = verify_certificate(back, {3, 5}, {Q(0), Q(2)});
  CHECK(rep.ok());
}
