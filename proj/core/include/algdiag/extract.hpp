#ifndef ALGDIAG_EXTRACT_HPP
#define ALGDIAG_EXTRACT_HPP

#include <cstddef>
#include <string>

#include "algdiag/bipoly.hpp"
#include "algdiag/field.hpp"
#include "algdiag/series.hpp"

namespace algdiag {

/// The equation f = P(X, f) with P(0,0) = 0 and P'_Y(0,0) = 0. Under these
/// hypotheses every monomial X^a Y^b of P has 2a + b >= 2, and the equation
/// has exactly one power-series solution with f(0) = 0.
class FixedPointProblem {
 public:
  /// Throws HypothesisViolated naming the condition that fails.
  explicit FixedPointProblem(BiPoly p);

  const BiPoly& poly() const noexcept { return p_; }
  const Field& field() const noexcept { return p_.field(); }

 private:
  BiPoly p_;
};

/// Empty when both hypotheses hold, otherwise a description of the failure.
std::string fixed_point_violation(const BiPoly& p);

/// f_0..f_N by f_n = sum_{m=1}^{2n-1} [X^n Y^{m-1}] (1 - P'_Y) P^m; f_0 = 0.
TruncSeries1 fs_coefficients(const FixedPointProblem& prob, std::size_t n_max);

/// Iterates f <- P(X, f) mod X^{N+1} from f = 0 until it stops changing.
TruncSeries1 fixed_point_coefficients(const FixedPointProblem& prob, std::size_t n_max);

/// sum_{m=1}^{m_max} [X^n Y^{m-1}] (1 - P'_Y) P^m. Equals f_n once m_max >= 2n-1.
Element fs_partial_sum(const FixedPointProblem& prob, std::size_t n, std::size_t m_max);

}  // namespace algdiag

#endif
