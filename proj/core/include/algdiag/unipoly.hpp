#ifndef ALGDIAG_UNIPOLY_HPP
#define ALGDIAG_UNIPOLY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algdiag/field.hpp"

namespace algdiag {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
/// The zero polynomial has an empty coefficient list and degree -1.
class UniPoly {
 public:
  explicit UniPoly(const Field& field);
  UniPoly(const Field& field, std::vector<Element> coeffs);

  static UniPoly constant(const Element& c);
  static UniPoly monomial(const Element& c, std::size_t degree);
  static UniPoly x(const Field& field);

  const Field& field() const noexcept { return *field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Element>& coeffs() const noexcept { return c_; }
  Element coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Element lead() const;
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t valuation() const noexcept;

  Element evaluate(const Element& x) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Element& c);
  UniPoly operator-() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  /// p(X^m)
  UniPoly inflate(std::size_t m) const;
  /// p(X) * X^k
  UniPoly shift(std::size_t k) const;
  UniPoly pow(std::uint64_t e) const;

  /// "1+X^2", "X-2*X^3", "(1+t)*X"; always explicit '*'.
  std::string to_string(std::string_view var = "X") const;

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Element& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b);

 private:
  void trim();

  const Field* field_;
  std::vector<Element> c_;
};

/// Euclidean division; throws ZeroDenominator when b is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

struct SquarefreeFactor {
  UniPoly factor;
  unsigned multiplicity;
};

/// Monic squarefree factors f = lc * prod factor^multiplicity, including the
/// p-th root descent needed in characteristic p.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f);

/// Renders a polynomial as a multiplicative factor of a larger expression:
/// "X", "(1+X)", "(1+X)^4" when it is a perfect power of one squarefree
/// factor, otherwise the parenthesized expanded form. Empty string for 1.
std::string factor_string(const UniPoly& p, std::string_view var = "X");

namespace detail {
/// Appends coeff*monomial to a sum being rendered; monomial may be empty.
void append_term(std::string& out, const Element& coeff, const std::string& monomial);
}  // namespace detail

}  // namespace algdiag

#endif
