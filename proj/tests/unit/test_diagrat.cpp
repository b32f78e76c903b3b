#include <gtest/gtest.h>

#include "algdiag/diagrat.hpp"
#include "algdiag/errors.hpp"
#include "algdiag/exprparse.hpp"
#include "algdiag/extract.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace algdiag;

const Field& F2 = Field::prime(2);
const Field& QQ = Field::rationals();

BiPoly poly(std::string_view s, const Field& f) { return parse_poly(s, f); }

TEST(FurstenbergRep, LinearRoot) {
  const DiagonalRep rep = furstenberg_rep(poly("Y-X", QQ));
  // Only the ratio is canonical: compare num/den cross-multiplied.
  EXPECT_EQ(rep.num * poly("1-X", QQ), rep.den * poly("Y", QQ));
  const TruncSeries1 d = diagonal_coeffs(rep, 8);
  for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(d[n].is_one(), n == 1);
}

TEST(FurstenbergRep, CatalanForm) {
  const DiagonalRep rep = furstenberg_rep(poly("X+Y^2-Y", QQ));
  EXPECT_EQ(rep.num, poly("Y-2*Y^2", QQ));
  EXPECT_EQ(rep.den, poly("1-X-Y", QQ));
  EXPECT_TRUE(rep.den.coeff(0, 0).is_one());
  const auto catalan = oracle::catalan(12);
  const TruncSeries1 d = diagonal_coeffs(rep, 12);
  EXPECT_TRUE(d[0].is_zero());
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(d[n], QQ.from_mpz(catalan[n - 1]));
}

TEST(FurstenbergRep, CatalanBinomialFormula) {
  // [X^n Y^n] (Y - 2Y^2)/(1 - X - Y) = C(2n-1, n-1) - 2 C(2n-2, n-2)
  const auto pascal = oracle::pascal(40);
  const TruncSeries1 d = diagonal_coeffs(furstenberg_rep(poly("X+Y^2-Y", QQ)), 20);
  for (std::size_t n = 2; n <= 20; ++n) {
    const mpz_class v = pascal[2 * n - 1][n - 1] - 2 * pascal[2 * n - 2][n - 2];
    EXPECT_EQ(d[n], QQ.from_mpz(v)) << n;
  }
}

TEST(FurstenbergRep, TmPolyIsThueMorse) {
  const DiagonalRep rep = furstenberg_rep(poly("(1+X)^3*Y^2+(1+X)^2*Y+X", F2));
  const TruncSeries1 d = diagonal_coeffs(rep, 100);
  for (std::size_t n = 0; n <= 100; ++n) EXPECT_EQ(d[n].code(), static_cast<std::uint64_t>(oracle::thue_morse(n)));
}

TEST(FurstenbergRep, Hypotheses) {
  for (const char* bad : {"Y^2+X", "1+Y", "Y-1", "X*Y+X"}) {
    try {
      furstenberg_rep(poly(bad, QQ));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::hypothesis_violated) << bad;
    }
  }
}

TEST(DiagonalCoeffs, SimpleReps) {
  const TruncSeries1 ones = diagonal_coeffs(make_diagonal_rep(poly("1", QQ), poly("(1-X)*(1-Y)", QQ)), 6);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_TRUE(ones[n].is_one());
  const TruncSeries1 c = diagonal_coeffs(make_diagonal_rep(poly("1", F2), poly("1-X-Y", F2)), 4);
  EXPECT_TRUE(c[0].is_one());
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(c[n].is_zero());
  EXPECT_THROW(make_diagonal_rep(poly("1", QQ), poly("X+Y", QQ)), Error);
}

TEST(FurstenbergRep, RoundTripOnRandomProblems) {
  gen::Rng rng(2);
  for (const Field* f : {&F2, &Field::prime(3), &Field::finite(4), &Field::prime(5), &QQ}) {
    for (int t = 0; t < 15; ++t) {
      const BiPoly p = gen::fixed_point_poly(*f, rng);
      const DiagonalRep rep = furstenberg_rep(p - BiPoly::y(*f));
      EXPECT_FALSE(rep.den.coeff(0, 0).is_zero());
      EXPECT_EQ(diagonal_coeffs(rep, 24), fixed_point_coefficients(FixedPointProblem(p), 24)) << p.to_string();
    }
  }
}

}  // namespace
