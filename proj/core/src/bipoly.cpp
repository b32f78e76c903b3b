#include "algdiag/bipoly.hpp"

#include <algorithm>

#include "algdiag/errors.hpp"

namespace algdiag {

BiPoly::BiPoly(const Field& field) : field_(&field) {}

BiPoly::BiPoly(const Field& field, const TermMap& terms) : field_(&field) {
  for (const auto& [m, c] : terms) add_term(m.first, m.second, c);
}

BiPoly BiPoly::constant(const Element& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Element& c, std::uint32_t i, std::uint32_t j) {
  BiPoly p(c.field());
  p.add_term(i, j, c);
  return p;
}

BiPoly BiPoly::x(const Field& field) { return monomial(field.one(), 1, 0); }

BiPoly BiPoly::y(const Field& field) { return monomial(field.one(), 0, 1); }

BiPoly BiPoly::from_y_coeffs(const Field& field, const std::vector<UniPoly>& coeffs) {
  BiPoly p(field);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& cj = coeffs[j].coeffs();
    for (std::size_t i = 0; i < cj.size(); ++i) {
      p.add_term(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), cj[i]);
    }
  }
  return p;
}

BiPoly BiPoly::from_x_poly(const UniPoly& p) { return from_y_coeffs(p.field(), {p}); }

Element BiPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_->zero() : it->second;
}

long BiPoly::degree_x() const noexcept {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.first));
  return d;
}

long BiPoly::degree_y() const noexcept {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.second));
  return d;
}

long BiPoly::total_degree() const noexcept {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.first + m.second));
  return d;
}

void BiPoly::add_term(std::uint32_t i, std::uint32_t j, const Element& c) {
  if (c.is_zero()) return;
  if (&c.field() != field_) throw Error(Errc::field_mismatch, "polynomial coefficient field");
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UniPoly BiPoly::coeff_y(std::uint32_t j) const {
  std::vector<Element> out;
  for (const auto& [m, c] : terms_) {
    if (m.second != j) continue;
    if (out.size() <= m.first) out.resize(m.first + 1, field_->zero());
    out[m.first] = c;
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly BiPoly::at_x_zero() const {
  std::vector<Element> out;
  for (const auto& [m, c] : terms_) {
    if (m.first != 0) continue;
    if (out.size() <= m.second) out.resize(m.second + 1, field_->zero());
    out[m.second] = c;
  }
  return UniPoly(*field_, std::move(out));
}

UniPoly BiPoly::eval_y(const Element& y) const {
  UniPoly acc(*field_);
  const long dy = degree_y();
  for (long j = dy; j >= 0; --j) {
    acc *= y;
    acc += coeff_y(static_cast<std::uint32_t>(j));
  }
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (field_ != rhs.field_) throw Error(Errc::field_mismatch, "polynomial sum");
  for (const auto& [m, c] : rhs.terms_) add_term(m.first, m.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (field_ != rhs.field_) throw Error(Errc::field_mismatch, "polynomial difference");
  for (const auto& [m, c] : rhs.terms_) add_term(m.first, m.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Element& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.field_ != b.field_) throw Error(Errc::field_mismatch, "polynomial product");
  BiPoly::TermMap acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      acc[{ma.first + mb.first, ma.second + mb.second}].add_product(ca, cb);
    }
  }
  return BiPoly(*a.field_, acc);
}

BiPoly BiPoly::pow(std::uint64_t e) const {
  BiPoly result = constant(field_->one());
  BiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string BiPoly::to_string() const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    auto append_var = [&mono](const char* var, std::uint32_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append_var("X", m.first);
    append_var("Y", m.second);
    detail::append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

std::string BiPoly::key() const {
  std::string k;
  for (const auto& [m, c] : terms_) {
    k += std::to_string(m.first);
    k += ',';
    k += std::to_string(m.second);
    k += ':';
    k += c.to_string();
    k += ';';
  }
  return k;
}

}  // namespace algdiag
