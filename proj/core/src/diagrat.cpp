#include "algdiag/diagrat.hpp"

#include <algorithm>
#include <limits>

#include "algdiag/algebra.hpp"
#include "algdiag/errors.hpp"

namespace algdiag {

DiagonalRep make_diagonal_rep(BiPoly num, BiPoly den, std::string source) {
  if (&num.field() != &den.field()) throw Error(Errc::field_mismatch, "diagonal representation");
  if (den.constant_term().is_zero()) {
    throw Error(Errc::zero_constant_term, "denominator " + den.to_string() + " vanishes at the origin");
  }
  return DiagonalRep{std::move(num), std::move(den), std::move(source)};
}

namespace {

BiPoly divide_y_power(const BiPoly& p, std::uint32_t v) {
  BiPoly out(p.field());
  for (const auto& [m, c] : p.terms()) out.add_term(m.first, m.second - v, c);
  return out;
}

}  // namespace

DiagonalRep furstenberg_rep(const BiPoly& q) {
  if (!q.constant_term().is_zero()) {
    throw Error(Errc::hypothesis_violated, "Q(0,0) = " + q.constant_term().to_string() + " != 0");
  }
  if (q.coeff(0, 1).is_zero()) throw Error(Errc::hypothesis_violated, "Q_Y(0,0) = 0");

  const Field& field = q.field();
  const BiPoly den_full = substitute_xy(q);
  const BiPoly num_full = BiPoly::monomial(field.one(), 0, 2) * substitute_xy(derivative_y(q));
  std::uint32_t v = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [m, c] : den_full.terms()) v = std::min(v, m.second);

  BiPoly den = divide_y_power(den_full, v);
  BiPoly num = divide_y_power(num_full, v);
  const Element scale = den.constant_term().inverse();
  return make_diagonal_rep(num * scale, den * scale, q.to_string());
}

TruncSeries1 diagonal_coeffs(const DiagonalRep& rep, std::size_t n_max) {
  return diagonal_series(series_expand_ratio(rep.num, rep.den, 2 * n_max), n_max);
}

}  // namespace algdiag
