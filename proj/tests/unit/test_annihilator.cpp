#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "algdiag/annihilator.hpp"
#include "algdiag/errors.hpp"
#include "algdiag/exprparse.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace algdiag;

const Field& F2 = Field::prime(2);

UniPoly upoly(std::string_view s, const Field& f = F2) { return parse_unipoly(s, f); }

Dfao thue_morse() { return Dfao(2, 0, {{0, 1}, {1, 0}}, {F2.zero(), F2.one()}); }

Dfao five_state_root() {
  std::ifstream f(std::string(ALGDIAG_TEST_DATA_DIR) + "/five_state_root.json");
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

FrobeniusRelation tm_relation() {
  return FrobeniusRelation{{upoly("X"), upoly("1+X"), upoly("(1+X)^4")}, 0, 2};
}

TruncSeries1 state_series(const Dfao& a, std::size_t s, std::size_t n) {
  std::vector<Element> c;
  for (std::uint64_t k = 0; k <= n; ++k) c.push_back(run_from(a, s, k));
  return TruncSeries1(a.field(), std::move(c));
}

TEST(KernelMatrix, ThueMorse) {
  const KernelMatrix m = kernel_matrix(thue_morse());
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.a[0][0], upoly("1"));
  EXPECT_EQ(m.a[0][1], upoly("X"));
  EXPECT_EQ(m.a[1][0], upoly("X"));
  EXPECT_EQ(m.a[1][1], upoly("1"));
}

TEST(KernelMatrix, SingleStateAndBase) {
  const Field& f3 = Field::prime(3);
  const KernelMatrix m = kernel_matrix(Dfao::constant(3, f3.one()));
  EXPECT_EQ(m.a[0][0], upoly("1+X+X^2", f3));
  try {
    kernel_matrix(Dfao::constant(2, f3.one()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::base_mismatch);
  }
}

TEST(KernelMatrix, RowsPartitionDigits) {
  const Dfao a = five_state_root();
  const KernelMatrix m = kernel_matrix(a);
  ASSERT_EQ(m.size(), 5u);
  for (std::size_t i = 0; i < m.size(); ++i) {
    UniPoly sum(F2);
    for (const auto& e : m.a[i]) {
      for (const auto& c : e.coeffs()) EXPECT_TRUE(c.is_zero() || c.is_one());
      sum += e;
    }
    EXPECT_EQ(sum, upoly("1+X"));
  }
}

TEST(KernelMatrix, SeriesIdentityOnZeroConsistentAutomata) {
  gen::Rng rng(51);
  std::vector<Dfao> corpus{thue_morse(), five_state_root()};
  for (const Field* f : {&F2, &Field::prime(3), &Field::finite(4)}) {
    for (int t = 0; t < 5; ++t) corpus.push_back(zero_consistent(gen::dfao(*f, 1 + rng() % 5, rng)));
  }
  const std::size_t n = 128;
  for (const Dfao& a : corpus) {
    const KernelMatrix m = kernel_matrix(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
      TruncSeries1 rhs(a.field(), n);
      for (std::size_t j = 0; j < a.size(); ++j) rhs += state_series(a, j, n).frobenius(1).mul_poly(m.a[i][j]);
      EXPECT_EQ(rhs, state_series(a, i, n));
    }
  }
}

TEST(FrobeniusRelation, ThueMorse) {
  const FrobeniusRelation rel = frobenius_relation(thue_morse());
  EXPECT_EQ(rel, tm_relation());
  EXPECT_EQ(rel.to_string(), "X*f + (1+X)*f^2 + (1+X)^4*f^4 = 0");
  EXPECT_EQ(rel.shift, 0u);
  EXPECT_TRUE(verify_relation(rel, generate(thue_morse(), 260)));
}

TEST(FrobeniusRelation, FiveStateRoot) {
  const FrobeniusRelation rel = frobenius_relation(five_state_root());
  EXPECT_EQ(rel, (FrobeniusRelation{{upoly("X^2+X^3"), upoly("1"), upoly("1")}, 0, 2}));
  EXPECT_EQ(rel.to_string(), "(X^2+X^3)*f + f^2 + f^4 = 0");
}

TEST(FrobeniusRelation, ZeroAutomaton) {
  const FrobeniusRelation rel = frobenius_relation(Dfao::constant(2, F2.zero()));
  EXPECT_EQ(rel.coeffs, std::vector<UniPoly>{upoly("1")});
  EXPECT_EQ(rel.to_string(), "f = 0");
}

TEST(FrobeniusRelation, RandomAutomataVerify) {
  gen::Rng rng(52);
  for (const Field* f : {&F2, &Field::prime(3), &Field::finite(4)}) {
    for (int t = 0; t < 8; ++t) {
      const Dfao a = gen::dfao(*f, 1 + rng() % 3, rng);
      FrobeniusRelation rel;
      try {
        rel = frobenius_relation(a);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::degree_blowup);
        continue;
      }
      long deg = 0;
      for (const auto& c : rel.coeffs) deg = std::max(deg, c.degree());
      EXPECT_TRUE(verify_relation(rel, generate(a, 256 + static_cast<std::size_t>(deg))));
      EXPECT_TRUE(rel.coeffs.back().lead().is_one());
    }
  }
}

TEST(FrobeniusRelation, StateCap) {
  try {
    frobenius_relation(thue_morse(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degree_blowup);
  }
}

TEST(VerifyRelation, Examples) {
  const FrobeniusRelation rel = tm_relation();
  std::vector<Element> tm;
  for (std::uint64_t n = 0; n <= 256; ++n) tm.push_back(F2.from_int(oracle::thue_morse(n)));
  const TruncSeries1 f(F2, tm);
  EXPECT_TRUE(verify_relation(rel, f));
  EXPECT_FALSE(verify_relation(rel, f + TruncSeries1::from_poly(upoly("X"), 256)));
  EXPECT_TRUE(verify_relation(rel, TruncSeries1(F2, 256)));
  EXPECT_THROW(verify_relation(rel, TruncSeries1(F2, 2)), Error);
}

TEST(CanonicalRelation, InvariantUnderScaling) {
  gen::Rng rng(53);
  const std::vector<RatFun> base{RatFun(upoly("X"), upoly("(1+X)^4")), RatFun(upoly("1"), upoly("(1+X)^3")),
                                 RatFun(upoly("1"))};
  for (int t = 0; t < 20; ++t) {
    UniPoly num = gen::unipoly(F2, 3, rng);
    UniPoly den = gen::unipoly(F2, 3, rng);
    if (num.is_zero() || den.is_zero()) continue;
    const RatFun s(num, den);
    std::vector<RatFun> scaled;
    for (const auto& c : base) scaled.push_back(c * s);
    EXPECT_EQ(canonical_relation(scaled, 2), tm_relation());
  }
  EXPECT_THROW(canonical_relation({RatFun(F2)}, 2), Error);
}

TEST(NullLeftVector, SmallMatrices) {
  const Field& qq = Field::rationals();
  const RatFun one(UniPoly::constant(qq.one()));
  const auto c = null_left_vector({{one}, {one}});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_FALSE(c[0].is_zero());
  EXPECT_EQ(c[0] + c[1], RatFun(qq));

  const auto d = null_left_vector({{RatFun(upoly("X"))}, {RatFun(upoly("X^2"))}});
  EXPECT_EQ(d[0] * RatFun(upoly("X")) + d[1] * RatFun(upoly("X^2")), RatFun(F2));
  EXPECT_EQ(d[0] / d[1], RatFun(upoly("X")));
}

TEST(NullLeftVector, ThueMorseMatrix) {
  // B_k = (prod_{i=k}^{1} A(X^{2^i}))_1 for k = 0, 1, 2 with A = [[1, X], [X, 1]].
  auto a = [](std::size_t m) {
    return std::vector<std::vector<RatFun>>{{RatFun(upoly("1")), RatFun(upoly("X").inflate(m))},
                                            {RatFun(upoly("X").inflate(m)), RatFun(upoly("1"))}};
  };
  auto row_times = [](const std::vector<RatFun>& v, const std::vector<std::vector<RatFun>>& m) {
    std::vector<RatFun> out(2, RatFun(F2));
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) out[j] += v[i] * m[i][j];
    }
    return out;
  };
  const std::vector<RatFun> e1{RatFun(upoly("1")), RatFun(F2)};
  const std::vector<std::vector<RatFun>> b{row_times(row_times(e1, a(1)), a(2)), row_times(e1, a(2)), e1};
  const auto c = null_left_vector(b);
  EXPECT_EQ(canonical_relation(c, 2), tm_relation());
}

}  // namespace
