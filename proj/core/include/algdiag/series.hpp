#ifndef ALGDIAG_SERIES_HPP
#define ALGDIAG_SERIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "algdiag/bipoly.hpp"
#include "algdiag/field.hpp"
#include "algdiag/unipoly.hpp"

namespace algdiag {

/// Power series c_0 + c_1 X + ... + c_N X^N + O(X^{N+1}).
/// Binary operations truncate to the smaller of the two orders.
class TruncSeries1 {
 public:
  /// Zero series of order n (n+1 coefficients).
  TruncSeries1(const Field& field, std::size_t order);
  /// Order = coeffs.size() - 1; coeffs must be nonempty.
  TruncSeries1(const Field& field, std::vector<Element> coeffs);

  static TruncSeries1 from_poly(const UniPoly& p, std::size_t order);

  const Field& field() const noexcept { return *field_; }
  std::size_t order() const noexcept { return c_.size() - 1; }
  const std::vector<Element>& coeffs() const noexcept { return c_; }
  const Element& operator[](std::size_t n) const { return c_.at(n); }
  Element& operator[](std::size_t n) { return c_.at(n); }
  bool is_zero() const;

  TruncSeries1 truncated(std::size_t order) const;

  TruncSeries1& operator+=(const TruncSeries1& rhs);
  TruncSeries1& operator-=(const TruncSeries1& rhs);
  TruncSeries1& operator*=(const Element& c);
  TruncSeries1 operator-() const;

  /// Multiplicative inverse; throws ZeroConstantTerm unless c_0 != 0.
  TruncSeries1 inverse() const;
  /// f^(q^k) over F_q, by spreading coefficients: [X^{n q^k}] = c_n.
  TruncSeries1 frobenius(unsigned k) const;
  /// p(X) * f mod X^{N+1}
  TruncSeries1 mul_poly(const UniPoly& p) const;

  friend TruncSeries1 operator+(TruncSeries1 a, const TruncSeries1& b) { return a += b; }
  friend TruncSeries1 operator-(TruncSeries1 a, const TruncSeries1& b) { return a -= b; }
  friend TruncSeries1 operator*(const TruncSeries1& a, const TruncSeries1& b);
  friend bool operator==(const TruncSeries1& a, const TruncSeries1& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  const Field* field_;
  std::vector<Element> c_;
};

/// Bivariate series truncated at total degree T: all X^i Y^j with i + j <= T.
/// Stored densely by total degree; terms() reports nonzeros in (i, j) order.
class TruncSeries2 {
 public:
  TruncSeries2(const Field& field, std::size_t total_degree);

  static TruncSeries2 from_bipoly(const BiPoly& p, std::size_t total_degree);

  const Field& field() const noexcept { return *field_; }
  std::size_t total_degree() const noexcept { return t_; }

  const Element& coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Element c);
  Element& at(std::size_t i, std::size_t j);

  std::vector<std::pair<Monomial, Element>> terms() const;

  friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b);
  friend bool operator==(const TruncSeries2& a, const TruncSeries2& b);

 private:
  static std::size_t index(std::size_t i, std::size_t j) {
    const std::size_t d = i + j;
    return d * (d + 1) / 2 + j;
  }

  const Field* field_;
  std::size_t t_;
  std::vector<Element> c_;
  Element zero_;
};

}  // namespace algdiag

#endif
