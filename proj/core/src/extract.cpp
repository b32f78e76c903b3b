#include "algdiag/extract.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "algdiag/algebra.hpp"
#include "algdiag/errors.hpp"

namespace algdiag {

std::string fixed_point_violation(const BiPoly& p) {
  if (!p.coeff(0, 0).is_zero()) return "P(0,0) = " + p.coeff(0, 0).to_string() + " != 0";
  if (!p.coeff(0, 1).is_zero()) return "P'_Y(0,0) = " + p.coeff(0, 1).to_string() + " != 0";
  return {};
}

FixedPointProblem::FixedPointProblem(BiPoly p) : p_(std::move(p)) {
  const std::string why = fixed_point_violation(p_);
  if (!why.empty()) throw Error(Errc::hypothesis_violated, why);
}

namespace {

// Coefficient rings for the extraction kernel. Each provides T, zero(),
// is_zero() and add_mul(acc, a, b) meaning acc += a*b.
struct PrimeRing {
  using T = std::uint64_t;
  std::uint64_t p;
  T zero() const { return 0; }
  static bool is_zero(T v) { return v == 0; }
  void add_mul(T& acc, T a, T b) const { acc = (acc + a * b % p) % p; }
};

struct CodeRing {
  using T = std::uint64_t;
  const Field* f;
  T zero() const { return 0; }
  static bool is_zero(T v) { return v == 0; }
  void add_mul(T& acc, T a, T b) const { acc = f->add_codes(acc, f->mul_codes(a, b)); }
};

struct IntRing {
  using T = mpz_class;
  T zero() const { return 0; }
  static bool is_zero(const T& v) { return sgn(v) == 0; }
  void add_mul(T& acc, const T& a, const T& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
};

template <typename T>
struct Term {
  std::size_t a;
  std::size_t b;
  T c;
};

// Calls emit(m, n, v) with v = [X^n Y^{m-1}] (W * P^m) for 1 <= m <= m_max and
// n <= N, skipping zeros. P^m is built incrementally on a dense grid and
// pruned to the terms that can still reach such a coefficient: since every
// monomial of P has weight 2a+b >= 2, a term X^a Y^b of P^m can contribute to
// [X^A Y^{M-1}] P^M with A <= N only if a <= N and b <= N - a + m - 1.
template <typename Ring, typename Emit>
void fs_kernel(const Ring& ring, const std::vector<Term<typename Ring::T>>& p,
               const std::vector<Term<typename Ring::T>>& w, std::size_t n_max, std::size_t m_max,
               Emit&& emit) {
  using T = typename Ring::T;
  m_max = std::min(m_max, 2 * n_max + 1);
  if (m_max == 0) return;
  const std::size_t rows = n_max + 1;
  const std::size_t width = n_max + m_max + 1;
  std::vector<T> cur(rows * width, ring.zero());
  std::vector<T> next(rows * width, ring.zero());
  auto cell = [width](std::vector<T>& g, std::size_t a, std::size_t b) -> T& { return g[a * width + b]; };

  // Band of P^m: 2m - 2a <= b <= N - a + m - 1.
  auto lo = [](std::size_t m, std::size_t a) { return 2 * m > 2 * a ? 2 * m - 2 * a : 0; };
  auto hi = [n_max](std::size_t m, std::size_t a) -> long {
    return static_cast<long>(n_max + m) - 1 - static_cast<long>(a);
  };

  for (const auto& t : p) {
    if (t.a <= n_max && static_cast<long>(t.b) <= hi(1, t.a)) cell(cur, t.a, t.b) = t.c;
  }
  for (std::size_t m = 1; m <= m_max; ++m) {
    // Extraction of [X^n Y^{m-1}] (W * P^m).
    for (std::size_t n = 0; n <= n_max; ++n) {
      T v = ring.zero();
      for (const auto& t : w) {
        if (t.a > n || t.b > m - 1) continue;
        const T& c = cell(cur, n - t.a, m - 1 - t.b);
        if (!Ring::is_zero(c)) ring.add_mul(v, t.c, c);
      }
      if (!Ring::is_zero(v)) emit(m, n, v);
    }
    if (m == m_max) break;
    std::fill(next.begin(), next.end(), ring.zero());
    bool any = false;
    for (std::size_t a = 0; a <= n_max; ++a) {
      const long top = std::min(hi(m, a), static_cast<long>(width) - 1);
      for (long bl = static_cast<long>(lo(m, a)); bl <= top; ++bl) {
        const std::size_t b = static_cast<std::size_t>(bl);
        const T& c = cell(cur, a, b);
        if (Ring::is_zero(c)) continue;
        for (const auto& t : p) {
          const std::size_t na = a + t.a;
          const std::size_t nb = b + t.b;
          if (na > n_max || static_cast<long>(nb) > hi(m + 1, na)) continue;
          ring.add_mul(cell(next, na, nb), c, t.c);
          any = true;
        }
      }
    }
    std::swap(cur, next);
    if (!any) break;
  }
}

std::vector<Term<std::uint64_t>> code_terms(const BiPoly& p) {
  std::vector<Term<std::uint64_t>> out;
  for (const auto& [m, c] : p.terms()) out.push_back({m.first, m.second, c.code()});
  return out;
}

// Values of sum_{m=1}^{m_max} [X^n Y^{m-1}] (1 - P'_Y) P^m for n = 0..N.
std::vector<Element> fs_sums(const BiPoly& p, std::size_t n_max, std::size_t m_max) {
  const Field& field = p.field();
  const BiPoly w = BiPoly::constant(field.one()) - derivative_y(p);
  std::vector<Element> out(n_max + 1, field.zero());

  if (field.kind() == Field::Kind::rational) {
    // Scale to integers: P = Pt / D, so (1 - P'_Y) P^m = (D - Pt'_Y) Pt^m / D^{m+1}.
    mpz_class d = 1;
    for (const auto& [m, c] : p.terms()) {
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.value().get_den_mpz_t());
    }
    std::vector<Term<mpz_class>> pt;
    std::vector<Term<mpz_class>> wt;
    for (const auto& [m, c] : p.terms()) {
      const mpq_class s = c.value() * d;
      pt.push_back({m.first, m.second, s.get_num()});
    }
    for (const auto& [m, c] : w.terms()) {
      const mpq_class s = c.value() * d;
      wt.push_back({m.first, m.second, s.get_num()});
    }
    std::vector<mpz_class> dpow{1};
    std::vector<mpq_class> acc(n_max + 1, 0);
    fs_kernel(IntRing{}, pt, wt, n_max, m_max, [&](std::size_t m, std::size_t n, const mpz_class& v) {
      while (dpow.size() <= m + 1) dpow.push_back(dpow.back() * d);
      mpq_class term(v, dpow[m + 1]);
      term.canonicalize();
      acc[n] += term;
    });
    for (std::size_t n = 0; n <= n_max; ++n) out[n] = field.from_rational(acc[n]);
    return out;
  }

  std::vector<std::uint64_t> acc(n_max + 1, 0);
  if (field.kind() == Field::Kind::prime) {
    const PrimeRing ring{field.characteristic()};
    fs_kernel(ring, code_terms(p), code_terms(w), n_max, m_max,
              [&](std::size_t, std::size_t n, std::uint64_t v) { acc[n] = (acc[n] + v) % ring.p; });
  } else {
    const CodeRing ring{&field};
    fs_kernel(ring, code_terms(p), code_terms(w), n_max, m_max,
              [&](std::size_t, std::size_t n, std::uint64_t v) { acc[n] = field.add_codes(acc[n], v); });
  }
  for (std::size_t n = 0; n <= n_max; ++n) out[n] = field.from_code(acc[n]);
  return out;
}

}  // namespace

TruncSeries1 fs_coefficients(const FixedPointProblem& prob, std::size_t n_max) {
  std::vector<Element> c = fs_sums(prob.poly(), n_max, n_max == 0 ? 0 : 2 * n_max - 1);
  c[0] = prob.field().zero();
  return TruncSeries1(prob.field(), std::move(c));
}

TruncSeries1 fixed_point_coefficients(const FixedPointProblem& prob, std::size_t n_max) {
  TruncSeries1 f(prob.field(), n_max);
  for (std::size_t it = 0; it <= n_max + 1; ++it) {
    TruncSeries1 g = compose_y(prob.poly(), f);
    if (g == f) break;
    f = std::move(g);
  }
  return f;
}

Element fs_partial_sum(const FixedPointProblem& prob, std::size_t n, std::size_t m_max) {
  if (m_max == 0) return prob.field().zero();
  return fs_sums(prob.poly(), n, m_max)[n];
}

}  // namespace algdiag
