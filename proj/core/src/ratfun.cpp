#include "algdiag/ratfun.hpp"

#include <algorithm>
#include <limits>

#include "algdiag/errors.hpp"

namespace algdiag {

RatFun::RatFun(const Field& field)
    : num_(field), den_(UniPoly::constant(field.one())) {}

RatFun::RatFun(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(num_.field().one())) {}

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFun::normalize() {
  if (den_.is_zero()) throw Error(Errc::zero_denominator, "rational function with zero denominator");
  if (&num_.field() != &den_.field()) throw Error(Errc::field_mismatch, "rational function");
  if (num_.is_zero()) {
    den_ = UniPoly::constant(num_.field().one());
    return;
  }
  if (den_.degree() > 0) {
    const UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Element lead = den_.lead();
  if (!lead.is_one()) {
    const Element inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

long RatFun::valuation() const {
  if (num_.is_zero()) return 0;
  return static_cast<long>(num_.valuation()) - static_cast<long>(den_.valuation());
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = rhs;
  // Cross-cancel first to keep intermediate degrees down.
  const UniPoly g1 = gcd(num_, rhs.den_);
  const UniPoly g2 = gcd(rhs.num_, den_);
  UniPoly n = divmod(num_, g1).first * divmod(rhs.num_, g2).first;
  UniPoly d = divmod(den_, g2).first * divmod(rhs.den_, g1).first;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& rhs) { return *this *= rhs.inverse(); }

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(Errc::zero_denominator, "inverse of zero rational function");
  return RatFun(den_, num_);
}

RatFun RatFun::inflate(std::size_t m) const { return RatFun(num_.inflate(m), den_.inflate(m)); }

std::string RatFun::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFun ratfun_normalize(UniPoly num, UniPoly den) { return RatFun(std::move(num), std::move(den)); }

BiRatFun biratfun_normalize(BiPoly num, BiPoly den) {
  if (den.is_zero()) throw Error(Errc::zero_denominator, "rational function with zero denominator");
  if (num.is_zero()) return {std::move(num), BiPoly::constant(den.field().one())};
  std::uint32_t min_i = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t min_j = min_i;
  for (const auto* p : {&num, &den}) {
    for (const auto& [m, c] : p->terms()) {
      min_i = std::min(min_i, m.first);
      min_j = std::min(min_j, m.second);
    }
  }
  if (min_i == 0 && min_j == 0) return {std::move(num), std::move(den)};
  auto shift = [&](const BiPoly& p) {
    BiPoly out(p.field());
    for (const auto& [m, c] : p.terms()) out.add_term(m.first - min_i, m.second - min_j, c);
    return out;
  };
  return {shift(num), shift(den)};
}

}  // namespace algdiag
