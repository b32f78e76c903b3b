#include "algdiag/annihilator.hpp"

#include <deque>

#include "algdiag/errors.hpp"
#include "algdiag/linalg.hpp"

namespace algdiag {

namespace {

constexpr std::uint64_t kMaxInflation = std::uint64_t{1} << 16;
constexpr std::size_t kVerifyOrder = 256;

std::string coefficient_prefix(const UniPoly& a) {
  if (a.degree() == 0) {
    if (a.lead().is_one()) return "";
    const std::string c = a.lead().to_expr();
    const bool compound = c.find_first_of("+-") != std::string::npos;
    return (compound ? "(" + c + ")" : c) + "*";
  }
  return factor_string(a) + "*";
}

UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  return divmod(a * b, gcd(a, b)).first;
}

// Multiplies every entry by the lcm of the denominators.
std::vector<UniPoly> clear_denominators(const std::vector<RatFun>& v) {
  const Field& field = v.front().field();
  UniPoly l = UniPoly::constant(field.one());
  for (const auto& e : v) l = lcm(l, e.den());
  std::vector<UniPoly> out;
  for (const auto& e : v) out.push_back(e.num() * divmod(l, e.den()).first);
  return out;
}

std::vector<UniPoly> vec_times_matrix(const std::vector<UniPoly>& v, const std::vector<std::vector<UniPoly>>& m) {
  const Field& field = v.front().field();
  std::vector<UniPoly> out(m.front().size(), UniPoly(field));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t k = 0; k < out.size(); ++k) {
      if (!m[j][k].is_zero()) out[k] += v[j] * m[j][k];
    }
  }
  return out;
}

}  // namespace

std::string FrobeniusRelation::to_string() const {
  std::string out;
  std::uint64_t power = 1;
  for (unsigned i = 0; i < shift; ++i) power *= q;
  for (std::size_t k = 0; k < coeffs.size(); ++k, power *= q) {
    if (coeffs[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(coeffs[k]) + (power == 1 ? "f" : "f^" + std::to_string(power));
  }
  return (out.empty() ? "0" : out) + " = 0";
}

FrobeniusRelation canonical_relation(const std::vector<RatFun>& coeffs, std::uint64_t q, unsigned shift) {
  std::size_t last = coeffs.size();
  while (last > 0 && coeffs[last - 1].is_zero()) --last;
  if (last == 0) throw Error(Errc::no_relation, "relation with all coefficients zero");
  std::vector<UniPoly> a = clear_denominators(std::vector<RatFun>(coeffs.begin(), coeffs.begin() + static_cast<long>(last)));
  UniPoly g(a.front().field());
  for (const auto& c : a) g = gcd(g, c);
  for (auto& c : a) c = divmod(c, g).first;
  const Element inv = a.back().lead().inverse();
  for (auto& c : a) c *= inv;
  return FrobeniusRelation{std::move(a), shift, q};
}

KernelMatrix kernel_matrix(const Dfao& a) {
  const Field& field = a.field();
  if (!field.is_finite() || field.cardinality() != a.q()) {
    throw Error(Errc::base_mismatch, "automaton base " + std::to_string(a.q()) + " does not match field " +
                                         field.name());
  }
  KernelMatrix m;
  m.q = a.q();
  m.a.assign(a.size(), std::vector<UniPoly>(a.size(), UniPoly(field)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (unsigned r = 0; r < a.q(); ++r) m.a[i][a.next(i, r)] += UniPoly::monomial(field.one(), r);
  }
  return m;
}

std::vector<std::vector<UniPoly>> state_relations(const Dfao& a, std::size_t max_degree) {
  // A vector c of polynomials of degree <= D (D >= 1) is a relation iff
  // eps(T_w c) = 0 for every digit word w, where T_r c = Lambda_r(c . A) and
  // eps(c) = sum_j c_j(0) out(j). T_r maps X^i e_j to X^{(i+r'-r)/q} e_{next(j,r')}
  // with r' = (r - i) mod q, so the functionals eps o T_w are permutations of
  // coordinates and their span is found by a closure.
  const Field& field = a.field();
  const std::size_t d = a.size();
  const std::size_t deg = std::max<std::size_t>(max_degree, 1);
  const std::size_t width = d * (deg + 1);
  const unsigned q = a.q();
  auto index = [deg](std::size_t j, std::size_t i) { return j * (deg + 1) + i; };

  RowReducer<Element> functionals(width, field.zero(), field.one());
  std::deque<std::vector<Element>> queue;
  std::vector<Element> eps(width, field.zero());
  for (std::size_t j = 0; j < d; ++j) eps[index(j, 0)] = a.output(j);
  if (functionals.insert(eps)) queue.push_back(eps);
  while (!queue.empty()) {
    const std::vector<Element> phi = std::move(queue.front());
    queue.pop_front();
    for (unsigned r = 0; r < q; ++r) {
      std::vector<Element> psi(width, field.zero());
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i <= deg; ++i) {
          const unsigned rp = static_cast<unsigned>((r + q - i % q) % q);
          const std::size_t target = (i + rp - r) / q;
          psi[index(j, i)] = phi[index(a.next(j, rp), target)];
        }
      }
      if (functionals.insert(psi)) queue.push_back(std::move(psi));
    }
  }

  RowReducer<RatFun> span(d, RatFun(field), RatFun(UniPoly::constant(field.one())));
  for (const auto& x : functionals.null_space()) {
    std::vector<RatFun> v;
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Element> c(x.begin() + static_cast<long>(index(j, 0)),
                             x.begin() + static_cast<long>(index(j, deg)) + 1);
      v.emplace_back(UniPoly(field, std::move(c)));
    }
    span.insert(std::move(v));
    if (span.rank() == d) break;
  }
  std::vector<std::vector<UniPoly>> out;
  for (const auto& row : span.rows()) out.push_back(clear_denominators(row));
  return out;
}

FrobeniusRelation frobenius_relation(const Dfao& input, std::size_t max_states) {
  kernel_matrix(input);  // base check
  const Dfao a = minimize(zero_consistent(input));
  const std::size_t d = a.size();
  if (d > max_states) {
    throw Error(Errc::degree_blowup, "minimized automaton has " + std::to_string(d) + " states, cap is " +
                                         std::to_string(max_states));
  }
  const Field& field = a.field();
  const std::uint64_t q = a.q();
  const KernelMatrix km = kernel_matrix(a);
  const auto relations = state_relations(a);
  const RatFun zero(field);
  const RatFun one(UniPoly::constant(field.one()));

  std::vector<UniPoly> e1(d, UniPoly(field));
  e1[0] = UniPoly::constant(field.one());
  // rows[k] = e_1 prod_{i=k}^{L-1} A(X^{q^i}), so rows[k] . G(X^{q^L}) = G_1^{q^k}.
  std::vector<std::vector<UniPoly>> rows{e1};
  std::uint64_t inflation = 1;  // q^L
  for (std::size_t len = 0; len <= d; ++len) {
    const std::size_t width = d + len + 1;
    RowReducer<RatFun> red(width, zero, one);
    // Relations among the G_j(X^{q^L}) are the inflated relations among G_j.
    for (const auto& rel : relations) {
      std::vector<RatFun> v(width, zero);
      for (std::size_t j = 0; j < d; ++j) v[j] = RatFun(rel[j].inflate(inflation));
      red.insert(std::move(v));
    }
    for (std::size_t k = 0; k <= len; ++k) {
      std::vector<RatFun> v(width, zero);
      for (std::size_t j = 0; j < d; ++j) v[j] = RatFun(rows[k][j]);
      v[d + k] = one;
      if (k < len) {
        red.insert(std::move(v));
        continue;
      }
      const std::vector<RatFun> res = red.reduce(std::move(v));
      bool dependent = true;
      for (std::size_t j = 0; j < d && dependent; ++j) dependent = res[j].is_zero();
      if (!dependent) break;
      FrobeniusRelation rel = canonical_relation(std::vector<RatFun>(res.begin() + static_cast<long>(d), res.end()), q);
      if (!verify_relation(rel, generate(a, kVerifyOrder + static_cast<std::size_t>(
                                                             std::max<long>(0, rel.coeffs.back().degree()))))) {
        throw Error(Errc::no_relation, "computed relation failed verification: " + rel.to_string());
      }
      return rel;
    }
    if (inflation > kMaxInflation / q) {
      throw Error(Errc::degree_blowup, "relation search needs X^(q^L) with q^L above " +
                                           std::to_string(kMaxInflation));
    }
    std::vector<std::vector<UniPoly>> a_inf(d, std::vector<UniPoly>(d, UniPoly(field)));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a_inf[i][j] = km.a[i][j].inflate(inflation);
    }
    for (auto& row : rows) row = vec_times_matrix(row, a_inf);
    rows.push_back(e1);
    inflation *= q;
  }
  throw Error(Errc::no_relation, "no Frobenius relation among d+1 powers");
}

bool verify_relation(const FrobeniusRelation& rel, const TruncSeries1& f) {
  long max_deg = 0;
  for (const auto& a : rel.coeffs) max_deg = std::max(max_deg, a.degree());
  const long check = static_cast<long>(f.order()) - max_deg;
  if (check < 0) {
    throw Error(Errc::insufficient_precision, "series order " + std::to_string(f.order()) +
                                                  " is below the relation degree " + std::to_string(max_deg));
  }
  const std::size_t m = static_cast<std::size_t>(check);
  TruncSeries1 sum(f.field(), m);
  const TruncSeries1 base = f.truncated(m);
  for (std::size_t k = 0; k < rel.coeffs.size(); ++k) {
    if (rel.coeffs[k].is_zero()) continue;
    sum += base.frobenius(static_cast<unsigned>(k + rel.shift)).mul_poly(rel.coeffs[k]);
  }
  return sum.is_zero();
}

std::vector<RatFun> null_left_vector(const std::vector<std::vector<RatFun>>& b) {
  if (b.empty()) throw Error(Errc::no_relation, "empty matrix");
  const Field& field = b.front().front().field();
  const std::size_t rows = b.size();
  const std::size_t cols = b.front().size();
  const RatFun zero(field);
  const RatFun one(UniPoly::constant(field.one()));
  RowReducer<RatFun> red(cols + rows, zero, one);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<RatFun> v(cols + rows, zero);
    for (std::size_t j = 0; j < cols; ++j) v[j] = b[i][j];
    v[cols + i] = one;
    const std::vector<RatFun> res = red.reduce(v);
    bool dependent = true;
    for (std::size_t j = 0; j < cols && dependent; ++j) dependent = res[j].is_zero();
    if (dependent) return std::vector<RatFun>(res.begin() + static_cast<long>(cols), res.end());
    red.insert(std::move(v));
  }
  throw Error(Errc::no_relation, "rows of B are linearly independent");
}

}  // namespace algdiag
