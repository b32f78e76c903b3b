#include "algdiag/errors.hpp"

namespace algdiag {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_field: return "InvalidField";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::zero_constant_term: return "ZeroConstantTerm";
    case Errc::insufficient_precision: return "InsufficientPrecision";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::negative_exponent: return "NegativeExponent";
    case Errc::unknown_symbol: return "UnknownSymbol";
    case Errc::infinite_field: return "InfiniteField";
    case Errc::state_budget_exceeded: return "StateBudgetExceeded";
    case Errc::digit_out_of_range: return "DigitOutOfRange";
    case Errc::schema_error: return "SchemaError";
    case Errc::base_mismatch: return "BaseMismatch";
    case Errc::degree_blowup: return "DegreeBlowup";
    case Errc::no_relation: return "NoRelation";
    case Errc::non_simple_root: return "NonSimpleRoot";
    case Errc::zero_a0: return "ZeroA0";
    case Errc::not_squarefree: return "NotSquarefree";
    case Errc::degenerate_reduction: return "DegenerateReduction";
    case Errc::negative_valuation: return "NegativeValuation";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(Errc code, std::size_t offset, const std::string& what)
    : Error(code, what + " at offset " + std::to_string(offset)), offset_(offset) {}

SchemaError::SchemaError(std::string path, const std::string& what)
    : Error(Errc::schema_error, what + " at " + path), path_(std::move(path)) {}

}  // namespace algdiag
