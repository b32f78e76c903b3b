#ifndef ALGDIAG_DIAGRAT_HPP
#define ALGDIAG_DIAGRAT_HPP

#include <cstddef>
#include <string>

#include "algdiag/bipoly.hpp"
#include "algdiag/series.hpp"

namespace algdiag {

/// A bivariate rational function num/den with den(0,0) != 0, whose diagonal
/// sum_n [X^n Y^n](num/den) t^n is the series of interest.
struct DiagonalRep {
  BiPoly num;
  BiPoly den;
  /// Source polynomial when built by furstenberg_rep, otherwise empty.
  std::string source;
};

/// Validating constructor; throws ZeroConstantTerm when den(0,0) = 0.
DiagonalRep make_diagonal_rep(BiPoly num, BiPoly den, std::string source = {});

/// For Q with Q(0,0) = 0 and Q_Y(0,0) != 0, let phi be the unique root with
/// phi(0) = 0. Returns num = Y^2 Q_Y(XY,Y) / Y^v, den = Q(XY,Y) / Y^v where
/// v is the Y-adic valuation of Q(XY,Y), scaled so that den(0,0) = 1. The
/// diagonal of num/den is phi. Throws HypothesisViolated.
DiagonalRep furstenberg_rep(const BiPoly& q);

/// Coefficients c_0..c_N of the diagonal, from the expansion to total degree 2N.
TruncSeries1 diagonal_coeffs(const DiagonalRep& rep, std::size_t n_max);

}  // namespace algdiag

#endif
