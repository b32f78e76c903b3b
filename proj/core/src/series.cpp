#include "algdiag/series.hpp"

#include <algorithm>

#include "algdiag/errors.hpp"

namespace algdiag {

TruncSeries1::TruncSeries1(const Field& field, std::size_t order)
    : field_(&field), c_(order + 1, field.zero()) {}

TruncSeries1::TruncSeries1(const Field& field, std::vector<Element> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(Errc::insufficient_precision, "series needs at least one coefficient");
  for (auto& c : c_) {
    if (!c.has_field()) c = field.zero();
  }
}

TruncSeries1 TruncSeries1::from_poly(const UniPoly& p, std::size_t order) {
  TruncSeries1 s(p.field(), order);
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size() && i <= order; ++i) s.c_[i] = c[i];
  return s;
}

bool TruncSeries1::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Element& e) { return e.is_zero(); });
}

TruncSeries1 TruncSeries1::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw Error(Errc::insufficient_precision, "cannot raise the order of a truncated series");
  }
  return TruncSeries1(*field_, std::vector<Element>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
}

TruncSeries1& TruncSeries1::operator+=(const TruncSeries1& rhs) {
  if (field_ != rhs.field_) throw Error(Errc::field_mismatch, "series sum");
  c_.resize(std::min(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

TruncSeries1& TruncSeries1::operator-=(const TruncSeries1& rhs) {
  if (field_ != rhs.field_) throw Error(Errc::field_mismatch, "series difference");
  c_.resize(std::min(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

TruncSeries1& TruncSeries1::operator*=(const Element& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncSeries1 TruncSeries1::operator-() const {
  TruncSeries1 r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TruncSeries1 operator*(const TruncSeries1& a, const TruncSeries1& b) {
  if (a.field_ != b.field_) throw Error(Errc::field_mismatch, "series product");
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  TruncSeries1 out(*a.field_, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.c_[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return out;
}

TruncSeries1 TruncSeries1::inverse() const {
  if (c_[0].is_zero()) throw Error(Errc::zero_constant_term, "series inverse needs a unit constant term");
  const std::size_t n = c_.size();
  TruncSeries1 out(*field_, n - 1);
  const Element inv0 = c_[0].inverse();
  out.c_[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Element acc = field_->zero();
    for (std::size_t i = 1; i <= k; ++i) acc.add_product(c_[i], out.c_[k - i]);
    out.c_[k] = -(acc * inv0);
  }
  return out;
}

TruncSeries1 TruncSeries1::frobenius(unsigned k) const {
  if (!field_->is_finite()) throw Error(Errc::infinite_field, "Frobenius spreading needs F_q");
  std::size_t step = 1;
  for (unsigned i = 0; i < k; ++i) step *= field_->cardinality();
  TruncSeries1 out(*field_, order());
  for (std::size_t n = 0; n * step <= order(); ++n) out.c_[n * step] = c_[n];
  return out;
}

TruncSeries1 TruncSeries1::mul_poly(const UniPoly& p) const {
  TruncSeries1 out(*field_, order());
  const auto& pc = p.coeffs();
  for (std::size_t i = 0; i < pc.size() && i <= order(); ++i) {
    if (pc[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order(); ++j) out.c_[i + j].add_product(pc[i], c_[j]);
  }
  return out;
}

// ---------------------------------------------------------------------------

TruncSeries2::TruncSeries2(const Field& field, std::size_t total_degree)
    : field_(&field),
      t_(total_degree),
      c_((total_degree + 1) * (total_degree + 2) / 2, field.zero()),
      zero_(field.zero()) {}

TruncSeries2 TruncSeries2::from_bipoly(const BiPoly& p, std::size_t total_degree) {
  TruncSeries2 s(p.field(), total_degree);
  for (const auto& [m, c] : p.terms()) {
    if (m.first + m.second <= total_degree) s.set(m.first, m.second, c);
  }
  return s;
}

const Element& TruncSeries2::coeff(std::size_t i, std::size_t j) const {
  if (i + j > t_) return zero_;
  return c_[index(i, j)];
}

void TruncSeries2::set(std::size_t i, std::size_t j, Element c) {
  if (i + j > t_) throw Error(Errc::insufficient_precision, "term beyond total-degree bound");
  c_[index(i, j)] = std::move(c);
}

Element& TruncSeries2::at(std::size_t i, std::size_t j) {
  if (i + j > t_) throw Error(Errc::insufficient_precision, "term beyond total-degree bound");
  return c_[index(i, j)];
}

std::vector<std::pair<Monomial, Element>> TruncSeries2::terms() const {
  std::vector<std::pair<Monomial, Element>> out;
  for (std::size_t i = 0; i <= t_; ++i) {
    for (std::size_t j = 0; i + j <= t_; ++j) {
      const Element& c = c_[index(i, j)];
      if (!c.is_zero()) {
        out.emplace_back(Monomial{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, c);
      }
    }
  }
  return out;
}

TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
  if (a.field_ != b.field_) throw Error(Errc::field_mismatch, "series product");
  const std::size_t t = std::min(a.t_, b.t_);
  TruncSeries2 out(*a.field_, t);
  const auto ta = a.terms();
  const auto tb = b.terms();
  for (const auto& [ma, ca] : ta) {
    if (ma.first + ma.second > t) continue;
    for (const auto& [mb, cb] : tb) {
      const std::size_t i = ma.first + mb.first;
      const std::size_t j = ma.second + mb.second;
      if (i + j > t) continue;
      out.c_[TruncSeries2::index(i, j)].add_product(ca, cb);
    }
  }
  return out;
}

bool operator==(const TruncSeries2& a, const TruncSeries2& b) {
  return a.field_ == b.field_ && a.t_ == b.t_ && a.c_ == b.c_;
}

}  // namespace algdiag
