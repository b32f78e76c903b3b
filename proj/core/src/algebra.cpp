#include "algdiag/algebra.hpp"

#include "algdiag/errors.hpp"

namespace algdiag {

BiPoly substitute_xy(const BiPoly& p) {
  BiPoly out(p.field());
  for (const auto& [m, c] : p.terms()) out.add_term(m.first, m.first + m.second, c);
  return out;
}

BiPoly derivative_y(const BiPoly& p) {
  BiPoly out(p.field());
  for (const auto& [m, c] : p.terms()) {
    if (m.second == 0) continue;
    out.add_term(m.first, m.second - 1, c * p.field().from_int(m.second));
  }
  return out;
}

TruncSeries2 series_expand_ratio(const BiPoly& num, const BiPoly& den, std::size_t total_degree) {
  if (&num.field() != &den.field()) throw Error(Errc::field_mismatch, "series_expand_ratio");
  const Element d00 = den.constant_term();
  if (d00.is_zero()) {
    throw Error(Errc::zero_constant_term, "denominator " + den.to_string() + " vanishes at the origin");
  }
  const Field& field = num.field();
  const Element inv = d00.inverse();
  std::vector<std::pair<Monomial, Element>> tail;
  for (const auto& [m, c] : den.terms()) {
    if (m.first != 0 || m.second != 0) tail.emplace_back(m, -c);
  }
  TruncSeries2 out(field, total_degree);
  for (std::size_t d = 0; d <= total_degree; ++d) {
    for (std::size_t j = 0; j <= d; ++j) {
      const std::size_t i = d - j;
      Element acc = num.coeff(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      for (const auto& [m, c] : tail) {
        if (m.first > i || m.second > j) continue;
        const Element& prev = out.coeff(i - m.first, j - m.second);
        if (!prev.is_zero()) acc.add_product(c, prev);
      }
      if (!acc.is_zero()) out.set(i, j, acc * inv);
    }
  }
  return out;
}

TruncSeries1 diagonal_series(const TruncSeries2& s, std::size_t order) {
  if (2 * order > s.total_degree()) {
    throw Error(Errc::insufficient_precision,
                "diagonal to order " + std::to_string(order) + " needs total degree " +
                    std::to_string(2 * order) + ", have " + std::to_string(s.total_degree()));
  }
  TruncSeries1 out(s.field(), order);
  for (std::size_t n = 0; n <= order; ++n) out[n] = s.coeff(n, n);
  return out;
}

TruncSeries1 compose_y(const BiPoly& p, const TruncSeries1& f) {
  const std::size_t order = f.order();
  TruncSeries1 acc(p.field(), order);
  for (long j = p.degree_y(); j >= 0; --j) {
    acc = acc * f;
    acc += TruncSeries1::from_poly(p.coeff_y(static_cast<std::uint32_t>(j)), order);
  }
  return acc;
}

}  // namespace algdiag
