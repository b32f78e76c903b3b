#include <gtest/gtest.h>

#include "algdiag/errors.hpp"
#include "algdiag/exprparse.hpp"
#include "generators.hpp"

namespace {

using namespace algdiag;

const Field& F2 = Field::prime(2);
const Field& QQ = Field::rationals();

BiPoly tm_poly(const Field& f) {
  // (1+X)^3 = 1+3X+3X^2+X^3, (1+X)^2 = 1+2X+X^2, built monomial by monomial.
  BiPoly p(f);
  const long long c3[] = {1, 3, 3, 1};
  const long long c2[] = {1, 2, 1};
  for (unsigned i = 0; i < 4; ++i) p.add_term(i, 2, f.from_int(c3[i]));
  for (unsigned i = 0; i < 3; ++i) p.add_term(i, 1, f.from_int(c2[i]));
  p.add_term(1, 0, f.one());
  return p;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::invalid_field;
}

TEST(ParsePoly, ThueMorsePoly) {
  EXPECT_EQ(parse_poly("(1+X)^3*Y^2+(1+X)^2*Y+X", F2), tm_poly(F2));
  EXPECT_EQ(parse_poly("(1+X)^3 Y^2 + (1+X)^2 Y + X", F2), tm_poly(F2));
  EXPECT_EQ(parse_poly("(1+X)^3*Y^2+(1+X)^2*Y+X", QQ), tm_poly(QQ));
}

TEST(ParsePoly, Basics) {
  EXPECT_TRUE(parse_poly("0", QQ).is_zero());
  const BiPoly p = parse_poly("X + Y^2", QQ);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(p.coeff(1, 0).is_one());
  EXPECT_TRUE(p.coeff(0, 2).is_one());
  EXPECT_TRUE(parse_poly("2*X", F2).is_zero());
  EXPECT_EQ(parse_poly("-X", Field::prime(3)), parse_poly("2X", Field::prime(3)));
  EXPECT_EQ(parse_poly("(1+X)Y", F2), parse_poly("Y+X*Y", F2));
  EXPECT_EQ(parse_poly("X/2", QQ).coeff(1, 0), QQ.from_rational(mpq_class(1, 2)));
  EXPECT_EQ(parse_poly("X^0", QQ), parse_poly("1", QQ));
}

TEST(ParsePoly, LargeLiteralsReduceModP) {
  EXPECT_EQ(parse_poly("100000000000000000000001*X", Field::prime(3)), parse_poly("2*X", Field::prime(3)));
}

TEST(ParsePoly, ExtensionGenerator) {
  const Field& f4 = Field::finite(4);
  const BiPoly p = parse_poly("t*X + t^2", f4);
  EXPECT_EQ(p.coeff(1, 0), f4.generator());
  EXPECT_EQ(p.coeff(0, 0), f4.generator() + f4.one());
}

TEST(ParsePoly, Errors) {
  EXPECT_EQ(code_of([] { parse_poly("X^-1", QQ); }), Errc::negative_exponent);
  EXPECT_EQ(code_of([] { parse_poly("X+Z", QQ); }), Errc::unknown_symbol);
  EXPECT_EQ(code_of([] { parse_poly("X+", QQ); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_poly("(X", QQ); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_poly("X)", QQ); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_poly("", QQ); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_poly("X/Y", QQ); }), Errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_poly("X/2", F2); }), Errc::zero_denominator);
}

TEST(ParsePoly, ErrorOffsetsPointInsideInput) {
  const std::vector<std::string> bad{"X+Z", "X^-1", "X+", "((X)", "X*Y)", "3 $ X", "X^", "Y^2+*X"};
  for (const auto& s : bad) {
    try {
      parse_poly(s, QQ);
      ADD_FAILURE() << s;
    } catch (const ParseError& e) {
      EXPECT_LE(e.offset(), s.size()) << s;
    }
  }
  try {
    parse_poly("X+Z", QQ);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(ParsePoly, PrintReparseRoundTrip) {
  gen::Rng rng(21);
  for (const Field* f : {&F2, &Field::prime(5), &Field::finite(4), &Field::finite(9), &QQ}) {
    for (int t = 0; t < 200 / 5; ++t) {
      const BiPoly p = gen::bipoly(*f, 5, rng);
      EXPECT_EQ(parse_poly(p.to_string(), *f), p) << p.to_string();
    }
  }
}

TEST(ParseRatfun, Examples) {
  const RatFun r = parse_ratfun("X/(1+X)^4", F2);
  EXPECT_EQ(r.num(), parse_unipoly("X", F2));
  EXPECT_EQ(r.den(), parse_unipoly("1+X^4", F2));
  EXPECT_EQ(parse_ratfun("1", QQ), RatFun(UniPoly::constant(QQ.one())));
  EXPECT_EQ(parse_ratfun("(X^2+X)/X", F2), RatFun(parse_unipoly("X+1", F2)));
  EXPECT_EQ(code_of([] { parse_ratfun("1/(X-X)", QQ); }), Errc::zero_denominator);
  EXPECT_EQ(code_of([] { parse_ratfun("Y/X", QQ); }), Errc::unknown_symbol);
}

TEST(ParseExpr, TreeShape) {
  const ExprAst a = parse_expr("-(1+X)^3*Y");
  ASSERT_EQ(a.kind, ExprAst::Kind::mul);
  EXPECT_EQ(a.children[0].kind, ExprAst::Kind::neg);
  EXPECT_EQ(a.children[0].children[0].kind, ExprAst::Kind::pow);
  EXPECT_EQ(a.children[0].children[0].exponent, 3u);
  EXPECT_EQ(a.children[1].variable, 'Y');
}

TEST(ParseFieldSpec, Grammar) {
  EXPECT_EQ(&parse_field_spec("Q"), &QQ);
  EXPECT_EQ(&parse_field_spec("F2"), &F2);
  EXPECT_EQ(parse_field_spec("F4").cardinality(), 4u);
  EXPECT_EQ(parse_field_spec("F2^2").cardinality(), 4u);
  const Field& f = parse_field_spec("F4:t^2+t+1");
  EXPECT_EQ(f.cardinality(), 4u);
  EXPECT_EQ(parse_field_spec("F3^2:t^2+1").modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(code_of([] { parse_field_spec("F6"); }), Errc::invalid_field);
  EXPECT_EQ(code_of([] { parse_field_spec("F4:t^2+1"); }), Errc::invalid_field);
  EXPECT_EQ(code_of([] { parse_field_spec("R"); }), Errc::invalid_field);
}

}  // namespace
