#include "algdiag/field.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "algdiag/errors.hpp"

namespace algdiag {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

// Dense polynomials over F_p, low to high, used only for extension arithmetic.
using DensePoly = std::vector<std::uint64_t>;

void trim(DensePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor.
DensePoly poly_rem(DensePoly a, const DensePoly& monic, std::uint64_t p) {
  trim(a);
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + p - mulmod(lead, monic[i], p)) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

std::string render_tpoly(const std::vector<std::uint64_t>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += "+";
    const bool unit = digits[i] == 1;
    if (i == 0) {
      out += std::to_string(digits[i]);
      continue;
    }
    if (!unit) out += std::to_string(digits[i]) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string trim_copy(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool parse_mpz(const std::string& s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  return out.set_str(s[0] == '+' ? s.substr(1) : s, 10) == 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field::Field(Private, Kind kind, std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : kind_(kind), p_(p), k_(k), modulus_(std::move(modulus)) {
  if (kind_ == Kind::rational) {
    q_ = 0;
    return;
  }
  q_ = 1;
  for (unsigned i = 0; i < k_; ++i) q_ *= p_;
  if (kind_ == Kind::extension && q_ <= 256) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    inv_table_.assign(q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a) {
      const auto da = code_digits(a);
      for (std::uint64_t b = 0; b < q_; ++b) {
        const auto db = code_digits(b);
        std::vector<std::uint64_t> s(k_);
        for (unsigned i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_table_[a * q_ + b] = static_cast<std::uint32_t>(digits_code(s));
        const std::uint64_t m = ext_mul_slow(a, b);
        mul_table_[a * q_ + b] = static_cast<std::uint32_t>(m);
        if (m == 1) inv_table_[a] = static_cast<std::uint32_t>(b);
      }
    }
  }
}

const Field& Field::intern(Kind kind, std::uint64_t p, unsigned k,
                           std::vector<std::uint64_t> modulus) {
  static std::mutex mutex;
  static std::deque<std::unique_ptr<Field>> storage;
  static std::map<std::tuple<int, std::uint64_t, unsigned, std::vector<std::uint64_t>>, const Field*>
      index;
  const std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(static_cast<int>(kind), p, k, modulus);
  if (auto it = index.find(key); it != index.end()) return *it->second;
  storage.push_back(std::make_unique<Field>(Private{}, kind, p, k, std::move(modulus)));
  index.emplace(std::move(key), storage.back().get());
  return *storage.back();
}

const Field& Field::rationals() {
  static const Field& q = intern(Kind::rational, 0, 1, {});
  return q;
}

const Field& Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 32)) {
    throw Error(Errc::invalid_field, std::to_string(p) + " is not a supported prime");
  }
  return intern(Kind::prime, p, 1, {});
}

bool Field::is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly) {
  DensePoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Make monic.
  const std::uint64_t inv_lead = powmod(f.back(), p - 2, p);
  for (auto& c : f) c = mulmod(c, inv_lead, p);
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (count > (std::uint64_t{1} << 24) / p) {
        throw Error(Errc::invalid_field, "irreducibility check too expensive");
      }
      count *= p;
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      DensePoly g(d + 1);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> Field::default_modulus(std::uint64_t p, unsigned k) {
  static const std::map<std::pair<std::uint64_t, unsigned>, std::vector<std::uint64_t>> table = {
      {{2, 2}, {1, 1, 1}},        // t^2+t+1
      {{2, 3}, {1, 1, 0, 1}},     // t^3+t+1
      {{3, 2}, {1, 0, 1}},        // t^2+1
      {{2, 4}, {1, 1, 0, 0, 1}},  // t^4+t+1
      {{5, 2}, {2, 0, 1}},        // t^2+2
      {{3, 3}, {1, 2, 0, 1}},     // t^3+2t+1
  };
  if (auto it = table.find({p, k}); it != table.end()) return it->second;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> m(k + 1);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = v % p;
      v /= p;
    }
    m[k] = 1;
    if (m[0] != 0 && is_irreducible(p, m)) return m;
  }
  throw Error(Errc::invalid_field, "no irreducible modulus found");
}

const Field& Field::extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw Error(Errc::invalid_field, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::invalid_field, "extension degree must be positive");
  if (k == 1 && modulus.empty()) return prime(p);
  long double q = 1;
  for (unsigned i = 0; i < k; ++i) q *= static_cast<long double>(p);
  if (q >= static_cast<long double>(std::uint64_t{1} << 32)) {
    throw Error(Errc::invalid_field, "field too large");
  }
  if (modulus.empty()) {
    modulus = default_modulus(p, k);
  } else {
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() != k + 1 || modulus.back() != 1) {
      throw Error(Errc::invalid_field, "modulus must be monic of degree " + std::to_string(k));
    }
    if (!is_irreducible(p, modulus)) {
      throw Error(Errc::invalid_field, "modulus is reducible over F_" + std::to_string(p));
    }
  }
  if (k == 1) return prime(p);
  return intern(Kind::extension, p, k, std::move(modulus));
}

const Field& Field::finite(std::uint64_t q) {
  if (q < 2) throw Error(Errc::invalid_field, "field order must be at least 2");
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned k = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) throw Error(Errc::invalid_field, std::to_string(q) + " is not a prime power");
    return extension(p, k);
  }
  return prime(q);
}

std::string Field::name() const {
  if (kind_ == Kind::rational) return "Q";
  return "F" + std::to_string(q_);
}

std::string Field::spec() const {
  switch (kind_) {
    case Kind::rational: return "Q";
    case Kind::prime: return "F" + std::to_string(p_);
    case Kind::extension: {
      return "F" + std::to_string(p_) + "^" + std::to_string(k_) + ":" + render_tpoly(modulus_);
    }
  }
  return "?";
}

std::vector<std::uint64_t> Field::code_digits(std::uint64_t code) const {
  std::vector<std::uint64_t> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::uint64_t Field::digits_code(const std::vector<std::uint64_t>& digits) const {
  std::uint64_t code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i] % p_;
  return code;
}

std::uint64_t Field::ext_mul_slow(std::uint64_t a, std::uint64_t b) const {
  const auto da = code_digits(a);
  const auto db = code_digits(b);
  DensePoly prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
  }
  auto r = poly_rem(prod, modulus_, p_);
  r.resize(k_, 0);
  return digits_code(r);
}

std::uint64_t Field::add_codes(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == Kind::prime) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  auto da = code_digits(a);
  const auto db = code_digits(b);
  for (unsigned i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
  return digits_code(da);
}

std::uint64_t Field::neg_code(std::uint64_t a) const {
  if (kind_ == Kind::prime) return a == 0 ? 0 : p_ - a;
  auto da = code_digits(a);
  for (auto& d : da) d = d == 0 ? 0 : p_ - d;
  return digits_code(da);
}

std::uint64_t Field::sub_codes(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == Kind::prime) return a >= b ? a - b : a + p_ - b;
  return add_codes(a, neg_code(b));
}

std::uint64_t Field::mul_codes(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == Kind::prime) return mulmod(a, b, p_);
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return ext_mul_slow(a, b);
}

std::uint64_t Field::inv_code(std::uint64_t a) const {
  if (a == 0) throw Error(Errc::zero_denominator, "inverse of zero");
  if (kind_ == Kind::prime) return powmod(a, p_ - 2, p_);
  if (!inv_table_.empty()) return inv_table_[a];
  // a^(q-2)
  std::uint64_t r = 1;
  std::uint64_t base = a;
  std::uint64_t e = q_ - 2;
  while (e != 0) {
    if (e & 1U) r = mul_codes(r, base);
    base = mul_codes(base, base);
    e >>= 1U;
  }
  return r;
}

Element Field::zero() const {
  if (kind_ == Kind::rational) return Element(*this, mpq_class(0));
  return Element(*this, std::uint64_t{0});
}

Element Field::one() const {
  if (kind_ == Kind::rational) return Element(*this, mpq_class(1));
  return Element(*this, std::uint64_t{1});
}

Element Field::from_int(long long v) const {
  if (kind_ == Kind::rational) return Element(*this, mpq_class(static_cast<long>(v)));
  const long long p = static_cast<long long>(p_);
  long long r = v % p;
  if (r < 0) r += p;
  return Element(*this, static_cast<std::uint64_t>(r));
}

Element Field::from_mpz(const mpz_class& v) const {
  if (kind_ == Kind::rational) return Element(*this, mpq_class(v));
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Element(*this, static_cast<std::uint64_t>(r.get_ui()));
}

Element Field::from_rational(const mpq_class& v) const {
  if (kind_ == Kind::rational) return Element(*this, v);
  const Element den = from_mpz(v.get_den());
  if (den.is_zero()) throw Error(Errc::zero_denominator, "denominator vanishes in " + name());
  return from_mpz(v.get_num()) / den;
}

Element Field::from_code(std::uint64_t code) const {
  if (kind_ == Kind::rational) throw Error(Errc::invalid_field, "Q has no element codes");
  if (code >= q_) throw Error(Errc::invalid_field, "element code out of range");
  return Element(*this, code);
}

Element Field::generator() const {
  if (kind_ != Kind::extension) throw Error(Errc::invalid_field, name() + " has no generator t");
  return Element(*this, p_);
}

Element Field::parse_element(std::string_view literal) const {
  const std::string s = trim_copy(literal);
  auto fail = [&]() -> Error {
    return Error(Errc::syntax_error, "bad element literal '" + s + "' for " + name());
  };
  if (!s.empty() && s.front() == '(') {
    if (kind_ == Kind::rational || s.back() != ')') throw fail();
    std::vector<std::uint64_t> digits;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string part;
    while (std::getline(ss, part, ',')) {
      mpz_class z;
      if (!parse_mpz(trim_copy(part), z)) throw fail();
      digits.push_back(from_mpz(z).code());
    }
    if (digits.empty() || digits.size() > k_) throw fail();
    return Element(*this, digits_code(digits));
  }
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string::npos) {
    if (!parse_mpz(s, num)) throw fail();
  } else {
    if (!parse_mpz(trim_copy(s.substr(0, slash)), num) ||
        !parse_mpz(trim_copy(s.substr(slash + 1)), den)) {
      throw fail();
    }
    if (den == 0) throw Error(Errc::zero_denominator, "literal '" + s + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(q);
}

std::vector<Element> Field::elements() const {
  if (!is_finite()) throw Error(Errc::infinite_field, "cannot enumerate Q");
  std::vector<Element> out;
  out.reserve(q_);
  for (std::uint64_t c = 0; c < q_; ++c) out.emplace_back(*this, c);
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const Field& field, std::uint64_t code) : field_(&field), v_(code) {
  if (!field.is_finite()) v_ = mpq_class(static_cast<unsigned long>(code));
}

Element::Element(const Field& field, mpq_class value) : field_(&field) {
  if (field.is_finite()) {
    *this = field.from_rational(value);
    return;
  }
  value.canonicalize();
  v_ = std::move(value);
}

const Field& Element::field() const {
  if (field_ == nullptr) throw Error(Errc::field_mismatch, "element has no field");
  return *field_;
}

bool Element::is_zero() const {
  if (field_ == nullptr) return true;
  if (const auto* c = std::get_if<std::uint64_t>(&v_)) return *c == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Element::is_one() const {
  if (field_ == nullptr) return false;
  if (const auto* c = std::get_if<std::uint64_t>(&v_)) return *c == 1;
  return std::get<mpq_class>(v_) == 1;
}

std::uint64_t Element::code() const {
  if (field_ == nullptr) return 0;
  if (const auto* c = std::get_if<std::uint64_t>(&v_)) return *c;
  throw Error(Errc::invalid_field, "rational element has no code");
}

const mpq_class& Element::value() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw Error(Errc::invalid_field, "finite-field element has no rational value");
}

const Field* Element::adopt(const Element& rhs) {
  if (rhs.field_ == nullptr) return field_;
  if (field_ == nullptr) {
    field_ = rhs.field_;
    if (field_->is_finite()) {
      v_ = std::uint64_t{0};
    } else {
      v_ = mpq_class(0);
    }
    return field_;
  }
  if (field_ != rhs.field_) {
    throw Error(Errc::field_mismatch, field_->name() + " vs " + rhs.field_->name());
  }
  return field_;
}

Element& Element::operator+=(const Element& rhs) {
  const Field* f = adopt(rhs);
  if (f == nullptr || rhs.field_ == nullptr) return *this;
  if (f->is_finite()) {
    auto& c = std::get<std::uint64_t>(v_);
    c = f->add_codes(c, std::get<std::uint64_t>(rhs.v_));
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(rhs.v_);
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  const Field* f = adopt(rhs);
  if (f == nullptr || rhs.field_ == nullptr) return *this;
  if (f->is_finite()) {
    auto& c = std::get<std::uint64_t>(v_);
    c = f->sub_codes(c, std::get<std::uint64_t>(rhs.v_));
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(rhs.v_);
  }
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  const Field* f = adopt(rhs);
  if (f == nullptr) return *this;
  if (rhs.field_ == nullptr) {
    *this = f->zero();
    return *this;
  }
  if (f->is_finite()) {
    auto& c = std::get<std::uint64_t>(v_);
    c = f->mul_codes(c, std::get<std::uint64_t>(rhs.v_));
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(rhs.v_);
  }
  return *this;
}

Element& Element::operator/=(const Element& rhs) {
  if (rhs.is_zero()) throw Error(Errc::zero_denominator, "division by zero");
  return *this *= rhs.inverse();
}

Element Element::operator-() const {
  if (field_ == nullptr) return *this;
  if (field_->is_finite()) return Element(*field_, field_->neg_code(std::get<std::uint64_t>(v_)));
  Element r = *this;
  std::get<mpq_class>(r.v_) = -std::get<mpq_class>(v_);
  return r;
}

void Element::add_product(const Element& a, const Element& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return;
  if (a.field_ != b.field_) throw Error(Errc::field_mismatch, "operands of product");
  const Field* f = adopt(a);
  if (f->is_finite()) {
    auto& c = std::get<std::uint64_t>(v_);
    const auto ca = std::get<std::uint64_t>(a.v_);
    const auto cb = std::get<std::uint64_t>(b.v_);
    if (ca == 0 || cb == 0) return;
    c = f->add_codes(c, f->mul_codes(ca, cb));
  } else {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(a.v_).get_mpq_t(),
            std::get<mpq_class>(b.v_).get_mpq_t());
    auto& acc = std::get<mpq_class>(v_);
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
  }
}

Element Element::inverse() const {
  if (is_zero()) throw Error(Errc::zero_denominator, "inverse of zero");
  if (field_->is_finite()) return Element(*field_, field_->inv_code(std::get<std::uint64_t>(v_)));
  Element r = *this;
  auto& q = std::get<mpq_class>(r.v_);
  mpq_inv(q.get_mpq_t(), q.get_mpq_t());
  return r;
}

Element Element::pow(std::uint64_t e) const {
  if (field_ == nullptr) return *this;
  Element result = field_->one();
  Element base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string Element::to_string() const {
  if (field_ == nullptr) return "0";
  switch (field_->kind()) {
    case Field::Kind::prime: return std::to_string(std::get<std::uint64_t>(v_));
    case Field::Kind::rational: return std::get<mpq_class>(v_).get_str();
    case Field::Kind::extension: {
      const auto d = field_->code_digits(std::get<std::uint64_t>(v_));
      std::string out = "(";
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (i != 0) out += ",";
        out += std::to_string(d[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

std::string Element::to_expr() const {
  if (field_ != nullptr && field_->kind() == Field::Kind::extension) {
    return render_tpoly(field_->code_digits(std::get<std::uint64_t>(v_)));
  }
  return to_string();
}

bool operator==(const Element& a, const Element& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return a.is_zero() && b.is_zero();
  if (a.field_ != b.field_) return false;
  return a.v_ == b.v_;
}

}  // namespace algdiag
