#ifndef ALGDIAG_ANNIHILATOR_HPP
#define ALGDIAG_ANNIHILATOR_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "algdiag/automaton.hpp"
#include "algdiag/ratfun.hpp"
#include "algdiag/series.hpp"
#include "algdiag/unipoly.hpp"

namespace algdiag {

/// A_0(X) f^{q^l} + A_1(X) f^{q^{l+1}} + ... + A_n(X) f^{q^{n+l}} = 0.
struct FrobeniusRelation {
  std::vector<UniPoly> coeffs;  // A_0..A_n
  unsigned shift = 0;           // l
  std::uint64_t q = 0;

  /// n, the index of the last coefficient.
  std::size_t length() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// "X*f + (1+X)*f^2 + (1+X)^4*f^4 = 0"
  std::string to_string() const;

  friend bool operator==(const FrobeniusRelation& a, const FrobeniusRelation& b) {
    return a.q == b.q && a.shift == b.shift && a.coeffs == b.coeffs;
  }
};

/// Clears denominators, divides by the gcd of all coefficients, drops trailing
/// zeros and makes the highest-index coefficient monic. Throws NoRelation when
/// every coefficient is zero.
FrobeniusRelation canonical_relation(const std::vector<RatFun>& coeffs, std::uint64_t q, unsigned shift = 0);

/// A_{i,j}(X) = sum of X^r over the digits r with next(i, r) = j.
struct KernelMatrix {
  unsigned q = 0;
  std::vector<std::vector<UniPoly>> a;

  std::size_t size() const noexcept { return a.size(); }
};

/// Throws BaseMismatch unless the digit base equals the output field's q.
KernelMatrix kernel_matrix(const Dfao& a);

/// Basis (over F_q(X), as polynomial vectors) of the linear relations
/// c . G = 0 among the state series G_s = sum_n run_from(a, s, n) X^n, for an
/// automaton with out(next(s, 0)) = out(s) (see zero_consistent). Relations
/// are searched among polynomial vectors of degree <= max_degree.
std::vector<std::vector<UniPoly>> state_relations(const Dfao& a, std::size_t max_degree = 16);

/// Shortest relation sum_k A_k G^{q^k} = 0 (l = 0) for the series G of `a`,
/// in canonical form. The automaton is first made zero-consistent and
/// minimized; DegreeBlowup when more than max_states states remain.
FrobeniusRelation frobenius_relation(const Dfao& a, std::size_t max_states = 8);

/// Checks sum_k A_k f^{q^{k+l}} = 0 mod X^{M+1}, M = order(f) - max deg A_k.
/// Throws InsufficientPrecision when M < 0.
bool verify_relation(const FrobeniusRelation& rel, const TruncSeries1& f);

/// Nonzero c with c . B = 0 for a matrix with more rows than columns, by
/// elimination over F(X). Throws NoRelation if the rows are independent.
std::vector<RatFun> null_left_vector(const std::vector<std::vector<RatFun>>& b);

}  // namespace algdiag

#endif
