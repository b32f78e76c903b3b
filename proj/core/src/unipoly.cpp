#include "algdiag/unipoly.hpp"

#include <algorithm>

#include "algdiag/errors.hpp"

namespace algdiag {

namespace detail {

void append_term(std::string& out, const Element& coeff, const std::string& monomial) {
  if (coeff.is_zero()) return;
  bool negative = false;
  Element magnitude = coeff;
  if (coeff.field().kind() == Field::Kind::rational && coeff.value() < 0) {
    negative = true;
    magnitude = -coeff;
  }
  std::string c = magnitude.to_expr();
  const bool composite = c.find_first_of("+-/") != std::string::npos;
  if (!out.empty()) {
    out += negative ? "-" : "+";
  } else if (negative) {
    out += "-";
  }
  if (monomial.empty()) {
    out += composite && c.find_first_of("+-") != std::string::npos ? "(" + c + ")" : c;
    return;
  }
  if (!magnitude.is_one()) out += (composite ? "(" + c + ")" : c) + "*";
  out += monomial;
}

}  // namespace detail

UniPoly::UniPoly(const Field& field) : field_(&field) {}

UniPoly::UniPoly(const Field& field, std::vector<Element> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (!c.has_field()) {
      c = field.zero();
    } else if (&c.field() != &field) {
      throw Error(Errc::field_mismatch, "polynomial coefficient field");
    }
  }
  trim();
}

UniPoly UniPoly::constant(const Element& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const Element& c, std::size_t degree) {
  std::vector<Element> v(degree + 1, c.field().zero());
  v[degree] = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::x(const Field& field) { return monomial(field.one(), 1); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Element UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

Element UniPoly::lead() const { return c_.empty() ? field_->zero() : c_.back(); }

std::size_t UniPoly::valuation() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return 0;
}

Element UniPoly::evaluate(const Element& x) const {
  Element acc = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += c_[i];
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (field_ != rhs.field_) throw Error(Errc::field_mismatch, "polynomial sum");
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), field_->zero());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (field_ != rhs.field_) throw Error(Errc::field_mismatch, "polynomial difference");
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), field_->zero());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.field_ != b.field_) throw Error(Errc::field_mismatch, "polynomial product");
  if (a.is_zero() || b.is_zero()) return UniPoly(*a.field_);
  std::vector<Element> out(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return UniPoly(*a.field_, std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const Element& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(*field_);
  std::vector<Element> out;
  out.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    out.push_back(c_[i] * field_->from_int(static_cast<long long>(i)));
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::inflate(std::size_t m) const {
  if (is_zero() || m == 1) return *this;
  std::vector<Element> out((c_.size() - 1) * m + 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * m] = c_[i];
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::shift(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Element> out(k, field_->zero());
  out.insert(out.end(), c_.begin(), c_.end());
  return UniPoly(*field_, std::move(out));
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  UniPoly result = constant(field_->one());
  UniPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string UniPoly::to_string(std::string_view var) const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::string mono;
    if (i >= 1) mono = std::string(var);
    if (i >= 2) mono += "^" + std::to_string(i);
    detail::append_term(out, c_[i], mono);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  return a.field_ == b.field_ && a.c_ == b.c_;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(Errc::zero_denominator, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<Element> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Element> quo(rem.size() - db, f.zero());
  const Element inv_lead = b.lead().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Element factor = rem[k] * inv_lead;
    quo[k - db] = factor;
    const Element neg = -factor;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i].add_product(neg, b.coeffs()[i]);
  }
  rem.resize(db);
  return {UniPoly(f, std::move(quo)), UniPoly(f, std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Inverse Frobenius on a polynomial whose exponents are all multiples of p.
UniPoly pth_root(const UniPoly& f) {
  const Field& field = f.field();
  const std::uint64_t p = field.characteristic();
  std::vector<Element> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    // a^(q/p) is the p-th root of a in F_q.
    out.push_back(f.coeffs()[i].pow(field.cardinality() / p));
  }
  return UniPoly(field, std::move(out));
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& f_in) {
  std::vector<SquarefreeFactor> result;
  if (f_in.degree() <= 0) return result;
  const UniPoly one = UniPoly::constant(f_in.field().one());
  const UniPoly f = f_in.monic();
  UniPoly c = gcd(f, f.derivative());
  UniPoly w = divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly z = divmod(w, y).first;
    if (z.degree() > 0) result.push_back({z, i});
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0 && f.field().is_finite()) {
    const auto p = static_cast<unsigned>(f.field().characteristic());
    for (auto& sub : squarefree_decomposition(pth_root(c))) {
      result.push_back({sub.factor, sub.multiplicity * p});
    }
  }
  return result;
}

std::string factor_string(const UniPoly& p, std::string_view var) {
  if (p.degree() == 0 && p.lead().is_one()) return "";
  const bool single_term =
      std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Element& c) { return !c.is_zero(); }) == 1;
  if (single_term && p.lead().is_one()) return p.to_string(var);
  if (p.degree() >= 2 && p.lead().is_one()) {
    const auto parts = squarefree_decomposition(p);
    if (parts.size() == 1 && parts[0].multiplicity > 1) {
      return "(" + parts[0].factor.to_string(var) + ")^" + std::to_string(parts[0].multiplicity);
    }
  }
  return "(" + p.to_string(var) + ")";
}

}  // namespace algdiag
