#ifndef ALGDIAG_BIPOLY_HPP
#define ALGDIAG_BIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algdiag/field.hpp"
#include "algdiag/unipoly.hpp"

namespace algdiag {

/// Exponent pair (i, j) of X^i Y^j. Ordered lexicographically.
using Monomial = std::pair<std::uint32_t, std::uint32_t>;

/// Sparse bivariate polynomial in X, Y. Only nonzero coefficients are stored,
/// and iteration is in increasing (i, j) order so printing is byte-stable.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Element>;

  explicit BiPoly(const Field& field);
  BiPoly(const Field& field, const TermMap& terms);

  static BiPoly constant(const Element& c);
  static BiPoly monomial(const Element& c, std::uint32_t i, std::uint32_t j);
  static BiPoly x(const Field& field);
  static BiPoly y(const Field& field);
  /// sum_j coeffs[j](X) Y^j
  static BiPoly from_y_coeffs(const Field& field, const std::vector<UniPoly>& coeffs);
  /// p(X) with no Y.
  static BiPoly from_x_poly(const UniPoly& p);

  const Field& field() const noexcept { return *field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Element coeff(std::uint32_t i, std::uint32_t j) const;
  Element constant_term() const { return coeff(0, 0); }

  /// -1 for the zero polynomial.
  long degree_x() const noexcept;
  long degree_y() const noexcept;
  long total_degree() const noexcept;

  void add_term(std::uint32_t i, std::uint32_t j, const Element& c);

  /// Coefficient of Y^j as a polynomial in X.
  UniPoly coeff_y(std::uint32_t j) const;
  /// P(0, Y) as a polynomial in Y.
  UniPoly at_x_zero() const;
  /// P(X, c) as a polynomial in X.
  UniPoly eval_y(const Element& c) const;

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const Element& c);
  BiPoly operator-() const;
  BiPoly pow(std::uint64_t e) const;

  /// Ascending (i,j) order with explicit '*': "X+Y^2", "1+X^2*Y^3".
  std::string to_string() const;
  /// Canonical byte encoding of the term list, usable as a hash key.
  std::string key() const;

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Element& c) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  const Field* field_;
  TermMap terms_;
};

}  // namespace algdiag

#endif
