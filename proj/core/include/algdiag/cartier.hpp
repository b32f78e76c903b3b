#ifndef ALGDIAG_CARTIER_HPP
#define ALGDIAG_CARTIER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "algdiag/automaton.hpp"
#include "algdiag/bipoly.hpp"
#include "algdiag/ratfun.hpp"
#include "algdiag/unipoly.hpp"

namespace algdiag {

/// Lambda_r(sum a_n X^n) = sum a_{qn+r} X^n over F_q. Throws DigitOutOfRange
/// unless 0 <= r < q, InfiniteField over Q.
UniPoly cartier(const UniPoly& a, unsigned r);

/// Lambda_r(P/Q) = Lambda_r(P Q^{q-1}) / Q, in canonical form.
RatFun cartier(const RatFun& a, unsigned r);

/// Lambda_{r,s}: [X^m Y^n] of the result is [X^{mq+r} Y^{nq+s}] of A.
BiPoly cartier(const BiPoly& a, unsigned r, unsigned s);

/// The q-kernel of the coefficient array of P/Q. States are numerators R of
/// R/Q; reading the digit pair (r, s) maps R to Lambda_{r,s}(R Q^{q-1}).
/// Transitions of state i are stored at index r + q*s.
struct KernelAutomaton2D {
  unsigned q = 0;
  BiPoly den;
  std::vector<BiPoly> states{};
  std::size_t initial = 0;
  std::vector<std::vector<std::size_t>> transitions{};
  /// a + b with a = deg P, b = deg Q (total degrees).
  long degree_bound = 0;

  std::size_t next(std::size_t state, unsigned r, unsigned s) const {
    return transitions[state][r + q * s];
  }
};

/// Closure of {P} under the q^2 maps. Throws InfiniteField over Q,
/// ZeroConstantTerm when Q(0,0) = 0, StateBudgetExceeded past `budget` states.
KernelAutomaton2D rational_kernel(const BiPoly& p, const BiPoly& q, std::size_t budget = 100000);

/// Constant term R(0,0)/Q(0,0) of the series R/Q.
Element kernel_output(const BiPoly& state, const BiPoly& den);

/// [X^m Y^n](P/Q) by reading the digit pairs of (m, n) least significant first.
Element run_kernel(const KernelAutomaton2D& aut, std::uint64_t m, std::uint64_t n);

/// 1-D automaton for the diagonal, keeping only the pairs (r, r). Unreachable
/// states are dropped; state labels are the numerators.
Dfao diagonal_automaton(const KernelAutomaton2D& aut);

/// JSON and DOT renderings of the 2-D automaton. Edge labels are "r.s" pairs.
std::string kernel_to_json(const KernelAutomaton2D& aut);
std::string kernel_to_dot(const KernelAutomaton2D& aut);

}  // namespace algdiag

#endif
