#include <gtest/gtest.h>

#include <cmath>

#include "algdiag/cartier.hpp"
#include "algdiag/diagrat.hpp"
#include "algdiag/errors.hpp"
#include "algdiag/exprparse.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace algdiag;

const Field& F2 = Field::prime(2);
const Field& F4 = Field::finite(4);

BiPoly poly(std::string_view s, const Field& f) { return parse_poly(s, f); }
UniPoly upoly(std::string_view s, const Field& f) { return parse_unipoly(s, f); }

// Coefficient-by-coefficient section over the bounding box of A.
BiPoly naive_section(const BiPoly& a, unsigned r, unsigned s) {
  const unsigned q = static_cast<unsigned>(a.field().cardinality());
  BiPoly out(a.field());
  const auto dx = static_cast<std::uint32_t>(std::max(a.degree_x(), 0L));
  const auto dy = static_cast<std::uint32_t>(std::max(a.degree_y(), 0L));
  for (std::uint32_t m = 0; m * q + r <= dx; ++m) {
    for (std::uint32_t n = 0; n * q + s <= dy; ++n) out.add_term(m, n, a.coeff(m * q + r, n * q + s));
  }
  return out;
}

BiPoly random_den(const Field& f, unsigned deg, gen::Rng& rng) {
  BiPoly q = gen::bipoly(f, deg, rng);
  q.add_term(0, 0, gen::nonzero_element(f, rng) - q.coeff(0, 0));
  return q;
}

TEST(CartierUni, DigitSelection) {
  EXPECT_EQ(cartier(upoly("X", F2), 1), upoly("1", F2));
  EXPECT_TRUE(cartier(upoly("X", F2), 0).is_zero());
  EXPECT_EQ(cartier(upoly("X^2", F2), 0), upoly("X", F2));
  EXPECT_EQ(cartier(upoly("1+X+X^3+X^5+X^6", F2), 1), upoly("1+X+X^2", F2));
  EXPECT_THROW(cartier(upoly("X", F2), 2), Error);
  EXPECT_THROW(cartier(upoly("X", Field::rationals()), 0), Error);
}

TEST(CartierUni, RationalMatchesSeriesSection) {
  gen::Rng rng(31);
  for (const Field* f : {&F2, &Field::prime(3), &F4}) {
    const unsigned q = static_cast<unsigned>(f->cardinality());
    for (int t = 0; t < 20; ++t) {
      const UniPoly num = gen::unipoly(*f, 4, rng);
      UniPoly den = gen::unipoly(*f, 3, rng);
      den += UniPoly::constant(gen::nonzero_element(*f, rng) - den.coeff(0));
      const RatFun r(num, den);
      const std::size_t len = 40;
      const auto series = TruncSeries1::from_poly(num, len * q + q).mul_poly(UniPoly::constant(f->one())) *
                          TruncSeries1::from_poly(den, len * q + q).inverse();
      for (unsigned d = 0; d < q; ++d) {
        const RatFun s = cartier(r, d);
        const auto got = TruncSeries1::from_poly(s.num(), len) * TruncSeries1::from_poly(s.den(), len).inverse();
        for (std::size_t n = 0; n <= len; ++n) EXPECT_EQ(got[n], series[n * q + d]);
      }
    }
  }
}

TEST(CartierBi, Examples) {
  EXPECT_EQ(cartier(poly("X*Y", F2), 1, 1), poly("1", F2));
  EXPECT_EQ(cartier(poly("X^2*Y", F2), 0, 1), poly("X", F2));
  const BiPoly q = poly("1+X+Y", F2);
  EXPECT_EQ(cartier(q, 0, 0), poly("1", F2));
  EXPECT_EQ(cartier(q, 1, 0), poly("1", F2));
  EXPECT_EQ(cartier(q, 0, 1), poly("1", F2));
  EXPECT_TRUE(cartier(q, 1, 1).is_zero());
  EXPECT_THROW(cartier(q, 0, 2), Error);
}

TEST(CartierBi, MatchesNaiveSection) {
  gen::Rng rng(32);
  for (const Field* f : {&F2, &Field::prime(3), &F4}) {
    const unsigned q = static_cast<unsigned>(f->cardinality());
    for (int t = 0; t < 30; ++t) {
      const BiPoly a = gen::bipoly(*f, 7, rng);
      const unsigned r = static_cast<unsigned>(rng() % q);
      const unsigned s = static_cast<unsigned>(rng() % q);
      EXPECT_EQ(cartier(a, r, s), naive_section(a, r, s));
    }
  }
}

TEST(CartierBi, FrobeniusPowerFactorsOut) {
  gen::Rng rng(33);
  for (const Field* f : {&F2, &F4}) {
    const unsigned q = static_cast<unsigned>(f->cardinality());
    for (int t = 0; t < 100; ++t) {
      const BiPoly a = gen::bipoly(*f, 3, rng);
      const BiPoly b = gen::bipoly(*f, 5, rng);
      const unsigned r = static_cast<unsigned>(rng() % q);
      const unsigned s = static_cast<unsigned>(rng() % q);
      EXPECT_EQ(cartier(a.pow(q) * b, r, s), a * cartier(b, r, s));
    }
  }
}

TEST(RationalKernel, InverseOfOnePlusXPlusY) {
  const KernelAutomaton2D aut = rational_kernel(poly("1", F2), poly("1+X+Y", F2));
  ASSERT_EQ(aut.states.size(), 2u);
  EXPECT_EQ(aut.states[aut.initial], poly("1", F2));
  const std::size_t i = aut.initial;
  EXPECT_EQ(aut.next(i, 0, 0), i);
  EXPECT_EQ(aut.next(i, 1, 0), i);
  EXPECT_EQ(aut.next(i, 0, 1), i);
  const std::size_t sink = aut.next(i, 1, 1);
  EXPECT_NE(sink, i);
  EXPECT_TRUE(aut.states[sink].is_zero());
}

TEST(RationalKernel, ZeroNumerator) {
  const KernelAutomaton2D aut = rational_kernel(BiPoly(F2), poly("1+X", F2));
  ASSERT_EQ(aut.states.size(), 1u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(aut.transitions[0][k], 0u);
  const Dfao d = diagonal_automaton(aut);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_TRUE(d.output(0).is_zero());
}

TEST(RationalKernel, Errors) {
  const Field& qq = Field::rationals();
  try {
    rational_kernel(poly("1", qq), poly("1+X", qq));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::infinite_field);
  }
  try {
    rational_kernel(poly("1", F2), poly("X+Y", F2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_constant_term);
  }
}

TEST(KernelOutput, ConstantTerm) {
  const BiPoly q = poly("1+X+Y", F2);
  EXPECT_TRUE(kernel_output(poly("1", F2), q).is_one());
  EXPECT_TRUE(kernel_output(BiPoly(F2), q).is_zero());
  EXPECT_TRUE(kernel_output(poly("X+1", F2), q).is_one());
  const Field& f3 = Field::prime(3);
  EXPECT_EQ(kernel_output(poly("1", f3), poly("2+X", f3)), f3.from_int(2));
}

TEST(RationalKernel, DegreeBoundAndCoefficients) {
  gen::Rng rng(34);
  for (const Field* f : {&F2, &Field::prime(3), &F4}) {
    const int trials = f == &F2 ? 25 : 6;
    for (int t = 0; t < trials; ++t) {
      const BiPoly p = gen::bipoly(*f, 3, rng);
      const BiPoly q = random_den(*f, f == &F2 ? 3 : 2, rng);
      const KernelAutomaton2D aut = rational_kernel(p, q);
      EXPECT_EQ(aut.degree_bound, std::max(p.total_degree(), 0L) + q.total_degree());
      const long bound = std::max(aut.degree_bound, 1L);
      for (std::size_t i = 0; i < aut.states.size(); ++i) {
        if (i == aut.initial) continue;
        EXPECT_LT(aut.states[i].total_degree(), bound) << p.to_string() << " / " << q.to_string();
      }
      // Number of polynomials of total degree < bound is q^(bound(bound+1)/2).
      const double monomials = static_cast<double>(bound * (bound + 1) / 2);
      EXPECT_LE(static_cast<double>(aut.states.size()),
                std::pow(static_cast<double>(f->cardinality()), monomials) + 1);
      const std::size_t size = 31;
      const auto grid = oracle::rational_grid(p, q, size);
      for (std::uint64_t m = 0; m <= size; ++m) {
        for (std::uint64_t n = 0; n <= size; ++n) ASSERT_EQ(run_kernel(aut, m, n), grid[m][n]) << m << "," << n;
      }
    }
  }
}

TEST(DiagonalAutomaton, CentralBinomialModTwo) {
  const Dfao d = minimize(diagonal_automaton(rational_kernel(poly("1", F2), poly("1+X+Y", F2))));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_TRUE(d.output(d.initial()).is_one());
  EXPECT_EQ(d.next(d.initial(), 0), d.initial());
  const std::size_t sink = d.next(d.initial(), 1);
  EXPECT_TRUE(d.output(sink).is_zero());
  const auto pascal = oracle::pascal(64);
  for (std::size_t n = 0; n <= 32; ++n) EXPECT_EQ(run(d, n).code(), mpz_class(pascal[2 * n][n] % 2).get_ui());
}

TEST(DiagonalAutomaton, TmPolyIsThueMorse) {
  const DiagonalRep rep = furstenberg_rep(poly("(1+X)^3*Y^2+(1+X)^2*Y+X", F2));
  const Dfao d = diagonal_automaton(rational_kernel(rep.num, rep.den));
  for (std::uint64_t n = 0; n <= 1000; ++n) ASSERT_EQ(run(d, n).code(), static_cast<std::uint64_t>(oracle::thue_morse(n)));
  EXPECT_EQ(minimize(d).size(), 2u);
}

TEST(DiagonalAutomaton, MatchesDiagonalOfRandomFractions) {
  gen::Rng rng(35);
  for (const Field* f : {&F2, &Field::prime(3)}) {
    for (int t = 0; t < 10; ++t) {
      const BiPoly p = gen::bipoly(*f, 3, rng);
      const BiPoly q = random_den(*f, 2, rng);
      const Dfao d = diagonal_automaton(rational_kernel(p, q));
      const auto grid = oracle::rational_grid(p, q, 40);
      for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(run(d, n), grid[n][n]);
    }
  }
}

TEST(KernelExport, JsonAndDotAreStable) {
  const KernelAutomaton2D aut = rational_kernel(poly("1", F2), poly("1+X+Y", F2));
  EXPECT_EQ(kernel_to_json(aut), kernel_to_json(rational_kernel(poly("1", F2), poly("1+X+Y", F2))));
  EXPECT_NE(kernel_to_json(aut).find("\"dimension\": 2"), std::string::npos);
  const std::string dot = kernel_to_dot(aut);
  EXPECT_NE(dot.find("1.1"), std::string::npos);
  EXPECT_EQ(dot, kernel_to_dot(aut));
}

}  // namespace
