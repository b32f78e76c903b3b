#include "generators.hpp"

#include <array>
#include <utility>

namespace gen {

using algdiag::BiPoly;
using algdiag::Element;
using algdiag::Field;

Element element(const Field& f, Rng& rng) {
  if (f.is_finite()) return f.from_code(rng() % f.cardinality());
  static constexpr std::array<long, 4> dens{1, 1, 2, 3};
  const long num = static_cast<long>(rng() % 7) - 3;
  return f.from_rational(mpq_class(num, dens[rng() % dens.size()]));
}

Element nonzero_element(const Field& f, Rng& rng) {
  for (;;) {
    Element e = element(f, rng);
    if (!e.is_zero()) return e;
  }
}

BiPoly bipoly(const Field& f, unsigned max_degree, Rng& rng) {
  BiPoly p(f);
  for (unsigned i = 0; i <= max_degree; ++i) {
    for (unsigned j = 0; i + j <= max_degree; ++j) {
      if (rng() % 2 == 0) p.add_term(i, j, element(f, rng));
    }
  }
  return p;
}

algdiag::UniPoly unipoly(const Field& f, unsigned max_degree, Rng& rng) {
  std::vector<Element> c;
  for (unsigned i = 0; i <= max_degree; ++i) c.push_back(element(f, rng));
  return algdiag::UniPoly(f, std::move(c));
}

BiPoly fixed_point_poly(const Field& f, Rng& rng) {
  static constexpr std::array<std::pair<unsigned, unsigned>, 13> kMonomials{{
      {1, 0}, {2, 0}, {3, 0}, {4, 0}, {0, 2}, {0, 3}, {0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}};
  BiPoly p(f);
  const auto& lead = kMonomials[rng() % 4];
  p.add_term(lead.first, lead.second, nonzero_element(f, rng));
  const unsigned extra = static_cast<unsigned>(rng() % 4);
  for (unsigned k = 0; k < extra; ++k) {
    const auto& m = kMonomials[rng() % kMonomials.size()];
    p.add_term(m.first, m.second, nonzero_element(f, rng));
  }
  return p;
}

algdiag::Dfao dfao(const Field& f, std::size_t states, Rng& rng) {
  const unsigned q = static_cast<unsigned>(f.cardinality());
  std::vector<std::vector<std::size_t>> delta(states, std::vector<std::size_t>(q));
  std::vector<Element> out;
  for (std::size_t s = 0; s < states; ++s) {
    for (unsigned r = 0; r < q; ++r) delta[s][r] = rng() % states;
    out.push_back(element(f, rng));
  }
  return algdiag::Dfao(q, 0, std::move(delta), std::move(out));
}

}  // namespace gen
