#ifndef ALGDIAG_FIELD_HPP
#define ALGDIAG_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace algdiag {

class Element;

/// Descriptor of a coefficient field: F_p, F_{p^k} or Q.
///
/// Descriptors are interned: every factory call with the same parameters
/// returns the same object, so fields compare by address and elements can
/// carry a plain pointer to theirs. Descriptors live for the whole program.
///
/// Elements of a finite field are encoded as integers ("codes"). For F_p the
/// code is the residue in [0, p). For F_{p^k} = F_p[t]/(m(t)) the code of
/// c_0 + c_1 t + ... + c_{k-1} t^{k-1} is sum c_i p^i.
class Field {
 public:
  enum class Kind { prime, extension, rational };

  static const Field& rationals();
  static const Field& prime(std::uint64_t p);
  /// F_{p^k}. An empty modulus selects the built-in one; a given modulus must be
  /// monic of degree k (coefficients low to high) and irreducible.
  static const Field& extension(std::uint64_t p, unsigned k,
                                std::vector<std::uint64_t> modulus = {});
  /// F_q for a prime power q, with the built-in modulus when q is not prime.
  static const Field& finite(std::uint64_t q);

  /// Built-in modulus for F_{p^k}: a fixed table for q in {4,8,9,16,25,27},
  /// otherwise the lexicographically first monic irreducible polynomial.
  static std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned k);

  /// Brute-force irreducibility test over F_p (trial division by every monic
  /// polynomial of degree <= deg/2).
  static bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ != Kind::rational; }
  /// 0 for Q.
  std::uint64_t characteristic() const noexcept { return p_; }
  /// q = p^k, or 0 for Q.
  std::uint64_t cardinality() const noexcept { return q_; }
  /// Extension degree k over the prime field (1 for F_p and Q).
  unsigned degree() const noexcept { return k_; }
  /// Monic modulus m(t), low to high; empty unless kind() == extension.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  /// Short name: "F2", "F4", "Q".
  std::string name() const;
  /// Full spec string accepted by parse_field_spec: "F2", "F2^2:t^2+t+1", "Q".
  std::string spec() const;

  Element zero() const;
  Element one() const;
  Element from_int(long long v) const;
  Element from_mpz(const mpz_class& v) const;
  /// Throws ZeroDenominator when the denominator vanishes in this field.
  Element from_rational(const mpq_class& v) const;
  Element from_code(std::uint64_t code) const;
  /// The class of t in F_p[t]/(m(t)). Extensions only (InvalidField otherwise).
  Element generator() const;
  /// Parses an element literal: decimal residue / integer, "a/b", or a
  /// coefficient tuple "(c0,c1,...)" for extensions.
  Element parse_element(std::string_view literal) const;
  /// All q elements in code order (finite fields only).
  std::vector<Element> elements() const;

  // Arithmetic on finite-field codes.
  std::uint64_t add_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_codes(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_code(std::uint64_t a) const;
  std::uint64_t mul_codes(std::uint64_t a, std::uint64_t b) const;
  /// Requires a != 0.
  std::uint64_t inv_code(std::uint64_t a) const;

  /// Digits of a code in base p (length k), low first.
  std::vector<std::uint64_t> code_digits(std::uint64_t code) const;
  std::uint64_t digits_code(const std::vector<std::uint64_t>& digits) const;

 private:
  struct Private {};

 public:
  Field(Private, Kind kind, std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

 private:
  static const Field& intern(Kind kind, std::uint64_t p, unsigned k,
                             std::vector<std::uint64_t> modulus);

  std::uint64_t ext_mul_slow(std::uint64_t a, std::uint64_t b) const;

  Kind kind_;
  std::uint64_t p_ = 0;
  unsigned k_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::uint64_t> modulus_;
  // Lookup tables for small extension fields.
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;
};

/// An exact element of a Field. Value type; cheap to copy for finite fields.
///
/// A default-constructed element is a "detached" zero with no field; it adopts
/// the field of the other operand in arithmetic, which keeps accumulators simple.
class Element {
 public:
  Element() = default;
  Element(const Field& field, std::uint64_t code);
  Element(const Field& field, mpq_class value);

  bool has_field() const noexcept { return field_ != nullptr; }
  const Field& field() const;

  bool is_zero() const;
  bool is_one() const;

  std::uint64_t code() const;
  const mpq_class& value() const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);
  Element operator-() const;

  /// this += a * b
  void add_product(const Element& a, const Element& b);

  Element inverse() const;
  Element pow(std::uint64_t e) const;

  /// Element literal as accepted by Field::parse_element.
  std::string to_string() const;
  /// Form used inside printed expressions: extension elements are written as
  /// polynomials in t, rationals as "a/b".
  std::string to_expr() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }
  friend bool operator==(const Element& a, const Element& b);

 private:
  const Field* adopt(const Element& rhs);

  const Field* field_ = nullptr;
  std::variant<std::uint64_t, mpq_class> v_{std::uint64_t{0}};
};

}  // namespace algdiag

#endif
