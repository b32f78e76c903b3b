#include "algdiag/roots.hpp"

#include <algorithm>
#include <unordered_map>

#include "algdiag/algebra.hpp"
#include "algdiag/cartier.hpp"
#include "algdiag/errors.hpp"
#include "algdiag/linalg.hpp"

namespace algdiag {

namespace {

void require_finite(const Field& f) {
  if (!f.is_finite()) throw Error(Errc::infinite_field, "power-series roots as automata need F_q");
}

// Polynomials in Y over F_q(X), coefficients low to high, no trailing zeros.
using KPoly = std::vector<RatFun>;

void ktrim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly kpoly_from(const BiPoly& p) {
  KPoly out;
  for (long j = 0; j <= p.degree_y(); ++j) out.emplace_back(p.coeff_y(static_cast<std::uint32_t>(j)));
  ktrim(out);
  return out;
}

KPoly kmod(KPoly a, const KPoly& b) {
  ktrim(a);
  const RatFun lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const RatFun f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_zero()) a[shift + i] -= f * b[i];
    }
    ktrim(a);
  }
  return a;
}

KPoly kgcd(KPoly a, KPoly b) {
  ktrim(a);
  ktrim(b);
  while (!b.empty()) {
    KPoly r = kmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

KPoly kderivative(const KPoly& a) {
  KPoly out;
  for (std::size_t j = 1; j < a.size(); ++j) {
    out.push_back(a[j] * RatFun(UniPoly::constant(a[j].field().from_int(static_cast<long long>(j)))));
  }
  ktrim(out);
  return out;
}

std::string ratfun_factor(const RatFun& r) {
  if (r.is_polynomial()) {
    const UniPoly& n = r.num();
    if (n.degree() == 0 && n.lead().is_one()) return "";
    const std::size_t terms = static_cast<std::size_t>(
        std::count_if(n.coeffs().begin(), n.coeffs().end(), [](const Element& c) { return !c.is_zero(); }));
    return (terms == 1 ? n.to_string() : "(" + n.to_string() + ")") + "*";
  }
  return r.to_string() + "*";
}

}  // namespace

std::vector<ResidueRoot> residue_roots(const BiPoly& p) {
  require_finite(p.field());
  const UniPoly p0 = p.at_x_zero();
  if (p0.is_zero()) throw Error(Errc::degenerate_reduction, "P(0, Y) is identically zero");
  const UniPoly dp0 = p0.derivative();
  std::vector<ResidueRoot> out;
  for (const Element& a : p.field().elements()) {
    if (p0.evaluate(a).is_zero()) out.push_back({a, !dp0.evaluate(a).is_zero()});
  }
  return out;
}

TruncSeries1 hensel_root(const BiPoly& p, const Element& a0, std::size_t n_max) {
  const Field& field = p.field();
  const UniPoly p0 = p.at_x_zero();
  if (!p0.evaluate(a0).is_zero()) {
    throw Error(Errc::hypothesis_violated, "P(0, " + a0.to_string() + ") != 0");
  }
  if (p0.derivative().evaluate(a0).is_zero()) {
    throw Error(Errc::non_simple_root, "P_Y(0, " + a0.to_string() + ") = 0");
  }
  const BiPoly dp = derivative_y(p);
  TruncSeries1 f(field, 0);
  f[0] = a0;
  std::size_t prec = 1;  // f is exact mod X^prec
  while (prec < n_max + 1) {
    prec = std::min(2 * prec, n_max + 1);
    std::vector<Element> c = f.coeffs();
    c.resize(prec, field.zero());
    TruncSeries1 g(field, std::move(c));
    const TruncSeries1 val = compose_y(p, g);
    const TruncSeries1 der = compose_y(dp, g);
    g -= val * der.inverse();
    f = std::move(g);
  }
  return f;
}

FrobeniusRelation frobenius_from_poly(const BiPoly& p) {
  const Field& field = p.field();
  require_finite(field);
  const std::uint64_t q = field.cardinality();
  const KPoly pk = kpoly_from(p);
  if (pk.size() < 2) throw Error(Errc::hypothesis_violated, "P has degree 0 in Y");
  const std::size_t d = pk.size() - 1;
  const KPoly dpk = kderivative(pk);
  if (dpk.empty()) throw Error(Errc::not_squarefree, "P_Y is identically zero");
  if (kgcd(pk, dpk).size() > 1) throw Error(Errc::not_squarefree, "gcd(P, P_Y) has positive degree in Y");

  const RatFun zero(field);
  const RatFun one(UniPoly::constant(field.one()));
  auto pad = [&](KPoly v) {
    v.resize(d, zero);
    return v;
  };
  // v = Y mod P
  KPoly v = pad(kmod(KPoly{zero, one}, pk));
  const std::size_t width = d + d + 1;
  RowReducer<RatFun> red(width, zero, one);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<RatFun> row(width, zero);
    std::copy(v.begin(), v.end(), row.begin());
    row[d + k] = one;
    const std::vector<RatFun> res = red.reduce(row);
    if (std::all_of(res.begin(), res.begin() + static_cast<long>(d), [](const RatFun& r) { return r.is_zero(); })) {
      std::vector<RatFun> c(res.begin() + static_cast<long>(d), res.begin() + static_cast<long>(d + k + 1));
      if (c[0].is_zero()) {
        throw Error(Errc::zero_a0, "the first Frobenius dependency has A_0 = 0");
      }
      return canonical_relation(c, q);
    }
    red.insert(std::move(row));
    // Frobenius: c(X) Y^i -> c(X^q) Y^{iq}, then reduce mod P.
    KPoly w((d - 1) * q + 1, zero);
    for (std::size_t i = 0; i < d; ++i) w[i * q] = v[i].inflate(q);
    v = pad(kmod(std::move(w), pk));
  }
  throw Error(Errc::no_relation, "no dependency among Y^(q^k), k <= deg_Y P");
}

bool ModuleElement::is_zero() const {
  return constant.is_zero() &&
         std::all_of(coords.begin(), coords.end(), [](const RatFun& r) { return r.is_zero(); });
}

std::string ModuleElement::key() const {
  std::string out = constant.to_string();
  for (const auto& c : coords) out += "|" + c.to_string();
  return out;
}

std::string ModuleElement::to_string(std::uint64_t q) const {
  std::string out;
  std::uint64_t power = 1;
  for (std::size_t j = 0; j < coords.size(); ++j, power *= q) {
    if (coords[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += ratfun_factor(coords[j]) + (power == 1 ? "f" : "f^" + std::to_string(power));
  }
  if (!constant.is_zero()) {
    if (!out.empty()) out += " + ";
    out += constant.to_string();
  }
  return out.empty() ? "0" : out;
}

ModuleElement cartier_step(const ModuleElement& e, const FrobeniusRelation& rel, unsigned r) {
  const std::size_t n = rel.length();
  const Field& field = rel.coeffs.front().field();
  ModuleElement out{cartier(e.constant, r), std::vector<RatFun>(n, RatFun(field))};
  for (std::size_t j = 1; j < n; ++j) {
    if (!e.coords[j].is_zero()) out.coords[j - 1] += cartier(e.coords[j], r);
  }
  if (n > 0 && !e.coords[0].is_zero()) {
    const RatFun a0(rel.coeffs[0]);
    for (std::size_t k = 1; k <= n; ++k) {
      if (rel.coeffs[k].is_zero()) continue;
      const RatFun bk = -RatFun(rel.coeffs[k]) / a0;
      out.coords[k - 1] += cartier(e.coords[0] * bk, r);
    }
  }
  return out;
}

ModuleSkeleton cartier_closure(const FrobeniusRelation& rel, std::size_t budget) {
  if (rel.coeffs.empty() || rel.coeffs[0].is_zero()) {
    throw Error(Errc::zero_a0, "Cartier closure needs A_0 != 0");
  }
  const Field& field = rel.coeffs.front().field();
  require_finite(field);
  const std::size_t n = rel.length();
  ModuleSkeleton skel;
  skel.q = static_cast<unsigned>(field.cardinality());
  skel.relation = rel;

  ModuleElement f{RatFun(field), std::vector<RatFun>(n, RatFun(field))};
  if (n > 0) f.coords[0] = RatFun(UniPoly::constant(field.one()));

  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](ModuleElement e) {
    auto [it, fresh] = index.emplace(e.key(), skel.states.size());
    if (fresh) {
      if (skel.states.size() >= budget) {
        throw Error(Errc::state_budget_exceeded,
                    "Cartier closure exceeded " + std::to_string(budget) + " states");
      }
      skel.states.push_back(std::move(e));
    }
    return it->second;
  };
  intern(std::move(f));
  for (std::size_t i = 0; i < skel.states.size(); ++i) {
    std::vector<std::size_t> row;
    for (unsigned r = 0; r < skel.q; ++r) {
      ModuleElement next = cartier_step(skel.states[i], rel, r);
      row.push_back(intern(std::move(next)));
    }
    skel.transitions.push_back(std::move(row));
  }
  return skel;
}

std::size_t output_precision(const ModuleSkeleton& skel) {
  long worst = 0;
  for (const auto& e : skel.states) {
    auto visit = [&](const RatFun& r) {
      if (!r.is_zero()) worst = std::max(worst, r.num().degree() + r.den().degree());
    };
    visit(e.constant);
    for (const auto& c : e.coords) visit(c);
  }
  return static_cast<std::size_t>(worst) + 8;
}

Element evaluate_constant_term(const ModuleElement& e, const TruncSeries1& f, std::size_t precision) {
  const Field& field = f.field();
  if (f.order() < precision) {
    throw Error(Errc::insufficient_precision, "branch series has order " + std::to_string(f.order()) +
                                                  ", outputs need " + std::to_string(precision));
  }
  const TruncSeries1 base = f.truncated(precision);
  struct Part {
    const RatFun* coeff;
    long frob;  // -1 for the constant part
  };
  std::vector<Part> parts;
  if (!e.constant.is_zero()) parts.push_back({&e.constant, -1});
  for (std::size_t j = 0; j < e.coords.size(); ++j) {
    if (!e.coords[j].is_zero()) parts.push_back({&e.coords[j], static_cast<long>(j)});
  }
  std::size_t shift = 0;  // largest power of X in a denominator
  for (const auto& part : parts) shift = std::max(shift, part.coeff->den().valuation());
  if (shift > precision) throw Error(Errc::insufficient_precision, "pole order exceeds output precision");

  // X^shift * e(f), as a power series.
  TruncSeries1 sum(field, precision);
  for (const auto& part : parts) {
    const UniPoly& den = part.coeff->den();
    const std::size_t v = den.valuation();
    const UniPoly unit(field, std::vector<Element>(den.coeffs().begin() + static_cast<long>(v), den.coeffs().end()));
    TruncSeries1 term = TruncSeries1::from_poly(unit, precision).inverse();
    term = term.mul_poly(part.coeff->num().shift(shift - v));
    if (part.frob >= 0) term = term * base.frobenius(static_cast<unsigned>(part.frob));
    sum += term;
  }
  for (std::size_t i = 0; i < shift; ++i) {
    if (!sum[i].is_zero()) {
      throw Error(Errc::negative_valuation, "state " + e.to_string(field.cardinality()) +
                                                " has a nonzero coefficient at X^" +
                                                std::to_string(static_cast<long>(i) - static_cast<long>(shift)));
    }
  }
  return sum[shift];
}

Dfao attach_outputs(const ModuleSkeleton& skel, BranchRoot& branch) {
  const std::size_t precision = output_precision(skel);
  branch.outputs.clear();
  std::vector<std::string> labels;
  for (const auto& e : skel.states) {
    branch.outputs.push_back(evaluate_constant_term(e, branch.series, precision));
    labels.push_back(e.to_string(skel.q));
  }
  return Dfao(skel.q, 0, skel.transitions, branch.outputs, std::move(labels));
}

RootsResult roots_automata(const BiPoly& p, std::size_t n_max) {
  const auto residues = residue_roots(p);
  RootsResult result;
  result.relation = frobenius_from_poly(p);
  result.skeleton = cartier_closure(result.relation);
  const std::size_t precision = std::max(n_max, output_precision(result.skeleton));
  for (const auto& root : residues) {
    if (!root.simple) {
      result.warnings.push_back("skipped residue root a0 = " + root.value.to_string() +
                                ": P_Y(0, a0) = 0, Hensel lifting does not apply");
      continue;
    }
    BranchRoot branch{root.value, hensel_root(p, root.value, precision), {}};
    const Dfao full = attach_outputs(result.skeleton, branch);
    Dfao minimal = minimize(full);
    const TruncSeries1 generated = generate(minimal, n_max);
    const bool verified = generated == branch.series.truncated(n_max) &&
                          compose_y(p, generated).is_zero() && verify_relation(result.relation, branch.series);
    result.branches.push_back({std::move(branch), std::move(minimal), verified});
  }
  if (result.branches.empty()) {
    throw Error(Errc::hypothesis_violated, "P(0, Y) has no simple root in " + p.field().name());
  }
  return result;
}

}  // namespace algdiag
