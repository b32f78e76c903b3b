#ifndef ALGDIAG_EXPRPARSE_HPP
#define ALGDIAG_EXPRPARSE_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "algdiag/bipoly.hpp"
#include "algdiag/field.hpp"
#include "algdiag/ratfun.hpp"
#include "algdiag/unipoly.hpp"

namespace algdiag {

/// Syntax tree of a polynomial expression.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/' | juxtaposition) unary)*
///   unary  := ('-' | '+') unary | power
///   power  := base ('^' uint)?
///   base   := uint | variable | '(' expr ')'
///
/// Whitespace is ignored. Juxtaposition ("(1+X)Y", "2X") multiplies.
struct ExprAst {
  enum class Kind { integer, variable, add, sub, neg, mul, div, pow };

  Kind kind = Kind::integer;
  std::size_t offset = 0;
  mpz_class integer;
  char variable = 0;
  std::uint64_t exponent = 0;
  std::vector<ExprAst> children;
};

/// Parses text into a tree. Only the single-letter variables listed in
/// `variables` are accepted; any other letter raises UnknownSymbol.
ExprAst parse_expr(std::string_view text, std::string_view variables = "XY");

/// Polynomial in X, Y over `field`. Integer literals are reduced into the
/// field; division is allowed only by nonzero constants. Over an extension
/// field the generator may be written as 't'.
BiPoly parse_poly(std::string_view text, const Field& field);

/// Univariate rational function in X ("X/(1+X)^4"), in canonical form.
RatFun parse_ratfun(std::string_view text, const Field& field);

/// Univariate polynomial in the given variable (used for moduli in t).
UniPoly parse_unipoly(std::string_view text, const Field& field, char variable = 'X');

/// Field spec: "Q", "F<q>" (q a prime power, built-in modulus), "F<p>^<k>",
/// optionally followed by ":<modulus in t>", e.g. "F4:t^2+t+1".
const Field& parse_field_spec(std::string_view spec);

}  // namespace algdiag

#endif
