#ifndef ALGDIAG_ERRORS_HPP
#define ALGDIAG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algdiag {

enum class Errc {
  invalid_field,
  field_mismatch,
  zero_denominator,
  zero_constant_term,
  insufficient_precision,
  hypothesis_violated,
  syntax_error,
  negative_exponent,
  unknown_symbol,
  infinite_field,
  state_budget_exceeded,
  digit_out_of_range,
  schema_error,
  base_mismatch,
  degree_blowup,
  no_relation,
  non_simple_root,
  zero_a0,
  not_squarefree,
  degenerate_reduction,
  negative_valuation,
};

/// Stable CamelCase name of an error code, e.g. "HypothesisViolated".
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the expression parser; offset is a byte index into the input.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t offset, const std::string& what);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised when a JSON document does not match the automaton schema.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what);

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace algdiag

#endif
