#ifndef ALGDIAG_RATFUN_HPP
#define ALGDIAG_RATFUN_HPP

#include <string>
#include <string_view>

#include "algdiag/bipoly.hpp"
#include "algdiag/unipoly.hpp"

namespace algdiag {

/// Univariate rational function in canonical form: gcd(num, den) = 1 and den
/// monic, so two rational functions are equal iff their representations are.
class RatFun {
 public:
  explicit RatFun(const Field& field);
  RatFun(UniPoly num);  // NOLINT(google-explicit-constructor)
  /// Normalizes; throws ZeroDenominator when den is zero.
  RatFun(UniPoly num, UniPoly den);

  const Field& field() const noexcept { return num_.field(); }
  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }

  /// X-adic valuation; 0 for the zero function.
  long valuation() const;

  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  RatFun& operator*=(const RatFun& rhs);
  RatFun& operator/=(const RatFun& rhs);
  RatFun operator-() const;
  RatFun inverse() const;
  /// r(X^m)
  RatFun inflate(std::size_t m) const;

  /// "num" when den = 1, else "(num)/(den)".
  std::string to_string(std::string_view var = "X") const;

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  UniPoly num_;
  UniPoly den_;
};

/// Canonical form of num/den. Throws ZeroDenominator.
RatFun ratfun_normalize(UniPoly num, UniPoly den);

/// Bivariate rational function num/den, reduced only by the common monomial
/// factor X^a Y^b; no multivariate gcd is attempted.
struct BiRatFun {
  BiPoly num;
  BiPoly den;
};

/// Removes the largest monomial dividing both sides. Throws ZeroDenominator.
BiRatFun biratfun_normalize(BiPoly num, BiPoly den);

}  // namespace algdiag

#endif
