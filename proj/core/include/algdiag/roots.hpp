#ifndef ALGDIAG_ROOTS_HPP
#define ALGDIAG_ROOTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "algdiag/annihilator.hpp"
#include "algdiag/automaton.hpp"
#include "algdiag/bipoly.hpp"
#include "algdiag/ratfun.hpp"
#include "algdiag/series.hpp"

namespace algdiag {

struct ResidueRoot {
  Element value;
  /// P_Y(0, value) != 0
  bool simple = false;
};

/// Every a in F_q with P(0, a) = 0, in code order. Throws DegenerateReduction
/// when P(0, Y) is identically zero, InfiniteField over Q.
std::vector<ResidueRoot> residue_roots(const BiPoly& p);

/// The series root f with f(0) = a0, to order N, by Newton iteration with
/// doubling precision. Throws NonSimpleRoot when P_Y(0, a0) = 0 and
/// HypothesisViolated when P(0, a0) != 0.
TruncSeries1 hensel_root(const BiPoly& p, const Element& a0, std::size_t n_max);

/// Shortest relation sum_k A_k Y^{q^k} = 0 in F_q(X)[Y]/(P): the powers
/// Y^{q^k} are reduced mod P and the first linear dependency (including k = 0)
/// is returned in canonical form. Throws NotSquarefree, ZeroA0.
FrobeniusRelation frobenius_from_poly(const BiPoly& p);

/// r_const + sum_{j<n} r_j f^{q^j} for a relation of length n.
struct ModuleElement {
  RatFun constant;
  std::vector<RatFun> coords;

  bool is_zero() const;
  /// Canonical encoding; equal keys iff equal coordinates.
  std::string key() const;
  /// "(1+X^2)/(X)*f^2 + (1)/(X)*f" style rendering.
  std::string to_string(std::uint64_t q) const;
};

/// Closure of {f} under the Cartier operators, with states as formal module
/// elements. transitions[i][r] is the state of Lambda_r(states[i]).
struct ModuleSkeleton {
  unsigned q = 0;
  FrobeniusRelation relation;
  std::vector<ModuleElement> states;
  std::vector<std::vector<std::size_t>> transitions;
};

/// Lambda_r of one element, rewriting f = sum_{k>=1} B_k f^{q^k} with
/// B_k = -A_k / A_0 before applying Lambda_r(g^q h) = g Lambda_r(h).
ModuleElement cartier_step(const ModuleElement& e, const FrobeniusRelation& rel, unsigned r);

/// Throws ZeroA0 and StateBudgetExceeded.
ModuleSkeleton cartier_closure(const FrobeniusRelation& rel, std::size_t budget = 4096);

/// Precision attach_outputs needs from a branch series: the largest
/// deg(num) + deg(den) over all state coefficients, plus 8.
std::size_t output_precision(const ModuleSkeleton& skel);

/// Constant term of the series e(f), computed on truncations. Throws
/// NegativeValuation when terms with negative exponents do not cancel, and
/// InsufficientPrecision when f is too short.
Element evaluate_constant_term(const ModuleElement& e, const TruncSeries1& f, std::size_t precision);

struct BranchRoot {
  Element a0;
  TruncSeries1 series;
  /// Output of each skeleton state for this branch.
  std::vector<Element> outputs;
};

/// Fills branch.outputs and returns the (unminimized) automaton.
Dfao attach_outputs(const ModuleSkeleton& skel, BranchRoot& branch);

struct RootBranchResult {
  BranchRoot branch;
  Dfao automaton;  // minimized
  /// generate(automaton, N) equals the Hensel series and P(X, f) = 0 mod X^{N+1}.
  bool verified = false;
};

struct RootsResult {
  FrobeniusRelation relation;
  ModuleSkeleton skeleton;
  std::vector<RootBranchResult> branches;
  std::vector<std::string> warnings;
};

/// End-to-end: one minimized automaton per simple residue root. Non-simple
/// residue roots are reported in `warnings`. Throws HypothesisViolated when no
/// simple residue root exists.
RootsResult roots_automata(const BiPoly& p, std::size_t n_max);

}  // namespace algdiag

#endif
