#ifndef ALGDIAG_ALGEBRA_HPP
#define ALGDIAG_ALGEBRA_HPP

#include <cstddef>

#include "algdiag/bipoly.hpp"
#include "algdiag/field.hpp"
#include "algdiag/ratfun.hpp"
#include "algdiag/series.hpp"
#include "algdiag/unipoly.hpp"

namespace algdiag {

/// P(XY, Y): each monomial X^a Y^b becomes X^a Y^(a+b).
BiPoly substitute_xy(const BiPoly& p);

/// Formal partial derivative in Y (coefficients multiplied by j in the field).
BiPoly derivative_y(const BiPoly& p);

/// Expansion of num/den up to total degree T. Throws ZeroConstantTerm when
/// den(0,0) = 0.
TruncSeries2 series_expand_ratio(const BiPoly& num, const BiPoly& den, std::size_t total_degree);

/// c_n = [X^n Y^n] S for n <= N. Throws InsufficientPrecision when 2N > T.
TruncSeries1 diagonal_series(const TruncSeries2& s, std::size_t order);

/// P(X, f(X)) truncated at the order of f.
TruncSeries1 compose_y(const BiPoly& p, const TruncSeries1& f);

}  // namespace algdiag

#endif
