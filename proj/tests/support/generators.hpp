#ifndef ALGDIAG_TESTS_GENERATORS_HPP
#define ALGDIAG_TESTS_GENERATORS_HPP

// Seeded random generators for property tests.

#include <cstdint>
#include <random>

#include "algdiag/automaton.hpp"
#include "algdiag/bipoly.hpp"
#include "algdiag/field.hpp"
#include "algdiag/unipoly.hpp"

namespace gen {

using Rng = std::mt19937_64;

/// Uniform element; over Q a small fraction a/b with |a| <= 3, b in {1,2,3}.
algdiag::Element element(const algdiag::Field& f, Rng& rng);
algdiag::Element nonzero_element(const algdiag::Field& f, Rng& rng);

/// Random polynomial with total degree <= max_degree, each monomial present
/// with probability 1/2.
algdiag::BiPoly bipoly(const algdiag::Field& f, unsigned max_degree, Rng& rng);
algdiag::UniPoly unipoly(const algdiag::Field& f, unsigned max_degree, Rng& rng);

/// P with P(0,0) = 0, P'_Y(0,0) = 0 and total degree <= 4: one pure power
/// X^a (a = 1..4) plus up to three other monomials X^a Y^b with 2a + b >= 2.
algdiag::BiPoly fixed_point_poly(const algdiag::Field& f, Rng& rng);

/// Random total automaton over F_q with the given number of states.
algdiag::Dfao dfao(const algdiag::Field& f, std::size_t states, Rng& rng);

}  // namespace gen

#endif
