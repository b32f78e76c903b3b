#include "algdiag/exprparse.hpp"

#include <cctype>
#include <string>

#include "algdiag/errors.hpp"

namespace algdiag {

namespace {

constexpr std::uint64_t kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, std::string_view variables) : text_(text), vars_(variables) {}

  ExprAst parse() {
    ExprAst e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(Errc::syntax_error, pos_, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static ExprAst binary(ExprAst::Kind kind, std::size_t offset, ExprAst lhs, ExprAst rhs) {
    ExprAst n;
    n.kind = kind;
    n.offset = offset;
    n.children.push_back(std::move(lhs));
    n.children.push_back(std::move(rhs));
    return n;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const std::size_t at = pos_++;
      ExprAst rhs = term();
      lhs = binary(c == '+' ? ExprAst::Kind::add : ExprAst::Kind::sub, at, std::move(lhs), std::move(rhs));
    }
  }

  bool starts_base(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  ExprAst term() {
    ExprAst lhs = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        const std::size_t at = pos_++;
        ExprAst rhs = unary();
        lhs = binary(c == '*' ? ExprAst::Kind::mul : ExprAst::Kind::div, at, std::move(lhs), std::move(rhs));
      } else if (starts_base(c)) {
        const std::size_t at = pos_;
        ExprAst rhs = unary();
        lhs = binary(ExprAst::Kind::mul, at, std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  ExprAst unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      const std::size_t at = pos_++;
      ExprAst inner = unary();
      if (c == '+') return inner;
      ExprAst n;
      n.kind = ExprAst::Kind::neg;
      n.offset = at;
      n.children.push_back(std::move(inner));
      return n;
    }
    return power();
  }

  ExprAst power() {
    ExprAst b = base();
    if (peek() != '^') return b;
    const std::size_t at = pos_++;
    const char c = peek();
    if (c == '-') throw ParseError(Errc::negative_exponent, pos_, "negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a nonnegative integer exponent");
    const std::size_t start = pos_;
    std::uint64_t e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (e > kMaxExponent) throw ParseError(Errc::syntax_error, start, "exponent too large");
      ++pos_;
    }
    ExprAst n;
    n.kind = ExprAst::Kind::pow;
    n.offset = at;
    n.exponent = e;
    n.children.push_back(std::move(b));
    return n;
  }

  ExprAst base() {
    const char c = peek();
    ExprAst n;
    n.offset = pos_;
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      n.kind = ExprAst::Kind::integer;
      n.integer.set_str(std::string(text_.substr(start, pos_ - start)), 10);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view ident = text_.substr(start, pos_ - start);
      if (ident.size() != 1 || vars_.find(ident[0]) == std::string_view::npos) {
        throw ParseError(Errc::unknown_symbol, start, "unknown symbol '" + std::string(ident) + "'");
      }
      n.kind = ExprAst::Kind::variable;
      n.variable = ident[0];
      return n;
    }
    if (c == '(') {
      ++pos_;
      ExprAst inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::string_view vars_;
  std::size_t pos_ = 0;
};

// Evaluates a tree in a value domain D providing literal/variable/div hooks.
template <typename D>
typename D::Value evaluate(const ExprAst& n, const D& dom) {
  using K = ExprAst::Kind;
  switch (n.kind) {
    case K::integer: return dom.literal(n.integer);
    case K::variable: return dom.variable(n.variable, n.offset);
    case K::add: return evaluate(n.children[0], dom) + evaluate(n.children[1], dom);
    case K::sub: return evaluate(n.children[0], dom) - evaluate(n.children[1], dom);
    case K::neg: return -evaluate(n.children[0], dom);
    case K::mul: return evaluate(n.children[0], dom) * evaluate(n.children[1], dom);
    case K::div: return dom.divide(evaluate(n.children[0], dom), evaluate(n.children[1], dom), n.offset);
    case K::pow: return dom.power(evaluate(n.children[0], dom), n.exponent);
  }
  throw Error(Errc::syntax_error, "corrupt expression tree");
}

struct BiPolyDomain {
  using Value = BiPoly;
  const Field& field;

  Value literal(const mpz_class& v) const { return BiPoly::constant(field.from_mpz(v)); }
  Value variable(char v, std::size_t offset) const {
    switch (v) {
      case 'X': return BiPoly::x(field);
      case 'Y': return BiPoly::y(field);
      case 't': return BiPoly::constant(field.generator());
      default: throw ParseError(Errc::unknown_symbol, offset, std::string("unknown symbol '") + v + "'");
    }
  }
  Value divide(const Value& a, const Value& b, std::size_t offset) const {
    if (b.is_zero()) throw ParseError(Errc::zero_denominator, offset, "division by zero");
    if (b.total_degree() != 0) {
      throw ParseError(Errc::syntax_error, offset, "division by a non-constant polynomial");
    }
    return a * b.constant_term().inverse();
  }
  Value power(const Value& a, std::uint64_t e) const { return a.pow(e); }
};

struct RatFunDomain {
  using Value = RatFun;
  const Field& field;
  char var;

  Value literal(const mpz_class& v) const { return RatFun(UniPoly::constant(field.from_mpz(v))); }
  Value variable(char v, std::size_t offset) const {
    if (v == var) return RatFun(UniPoly::x(field));
    if (v == 't' && field.kind() == Field::Kind::extension) {
      return RatFun(UniPoly::constant(field.generator()));
    }
    throw ParseError(Errc::unknown_symbol, offset, std::string("unknown symbol '") + v + "'");
  }
  Value divide(const Value& a, const Value& b, std::size_t offset) const {
    if (b.is_zero()) throw ParseError(Errc::zero_denominator, offset, "division by zero");
    return a / b;
  }
  Value power(const Value& a, std::uint64_t e) const {
    return RatFun(a.num().pow(e), a.den().pow(e));
  }
};

std::string poly_vars(const Field& field) {
  return field.kind() == Field::Kind::extension ? "XYt" : "XY";
}

}  // namespace

ExprAst parse_expr(std::string_view text, std::string_view variables) {
  return Parser(text, variables).parse();
}

BiPoly parse_poly(std::string_view text, const Field& field) {
  const ExprAst ast = parse_expr(text, poly_vars(field));
  return evaluate(ast, BiPolyDomain{field});
}

RatFun parse_ratfun(std::string_view text, const Field& field) {
  const std::string vars = field.kind() == Field::Kind::extension ? "Xt" : "X";
  const ExprAst ast = parse_expr(text, vars);
  return evaluate(ast, RatFunDomain{field, 'X'});
}

UniPoly parse_unipoly(std::string_view text, const Field& field, char variable) {
  std::string vars(1, variable);
  if (field.kind() == Field::Kind::extension && variable != 't') vars += 't';
  const ExprAst ast = parse_expr(text, vars);
  const RatFun r = evaluate(ast, RatFunDomain{field, variable});
  if (!r.is_polynomial()) {
    throw Error(Errc::syntax_error, "expected a polynomial, got " + r.to_string());
  }
  return r.num() * r.den().lead().inverse();
}

const Field& parse_field_spec(std::string_view spec_in) {
  std::string spec;
  for (char c : spec_in) {
    if (!std::isspace(static_cast<unsigned char>(c))) spec += c;
  }
  auto bad = [&]() { return Error(Errc::invalid_field, "bad field spec '" + std::string(spec_in) + "'"); };
  if (spec == "Q" || spec == "QQ") return Field::rationals();
  if (spec.size() < 2 || (spec[0] != 'F' && spec[0] != 'f')) throw bad();
  std::size_t pos = 1;
  auto read_uint = [&]() {
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(spec[pos] - '0');
      if (v > (std::uint64_t{1} << 40)) throw bad();
      ++pos;
    }
    if (pos == start) throw bad();
    return v;
  };
  const std::uint64_t n = read_uint();
  std::uint64_t k = 0;
  if (pos < spec.size() && spec[pos] == '^') {
    ++pos;
    k = read_uint();
    if (k == 0 || k > 64) throw bad();
  }
  std::string modulus_text;
  if (pos < spec.size()) {
    if (spec[pos] != ':') throw bad();
    modulus_text = spec.substr(pos + 1);
    if (modulus_text.empty()) throw bad();
  }
  // Resolve the prime and degree.
  std::uint64_t p = n;
  unsigned deg = k == 0 ? 1 : static_cast<unsigned>(k);
  if (k == 0) {
    const Field& base = Field::finite(n);
    p = base.characteristic();
    deg = base.degree();
  }
  if (modulus_text.empty()) return deg == 1 ? Field::prime(p) : Field::extension(p, deg);
  const UniPoly m = parse_unipoly(modulus_text, Field::prime(p), 't');
  if (k == 0 && deg == 1) deg = static_cast<unsigned>(m.degree());
  if (m.degree() != static_cast<long>(deg)) {
    throw Error(Errc::invalid_field, "modulus degree does not match field order");
  }
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : m.coeffs()) coeffs.push_back(c.code());
  return Field::extension(p, deg, std::move(coeffs));
}

}  // namespace algdiag
