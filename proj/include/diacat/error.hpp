#ifndef DIACAT_ERROR_HPP_
#define DIACAT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace diacat {

// Stable machine-readable error codes; the CLI prints these verbatim.
enum class ErrorCode {
  param_mismatch,
  division_by_zero,
  parse_error,
  type_mismatch,
  unknown_preset,
  missing_parameter,
  unsupported_hom,
  invalid_label,
  frobenius_not_associative,
  frobenius_not_unital,
  frobenius_degenerate,
  frobenius_not_symmetric,
  frobenius_incomplete,
  unassigned_generator,
  unassigned_parameter,
  shape_mismatch,
  invalid_partition,
  invalid_tableau,
  idempotent_mismatch,
  not_idempotent,
  triple_condition,
  invalid_argument,
};

inline char const* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::param_mismatch: return "param-mismatch";
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::type_mismatch: return "type-mismatch";
    case ErrorCode::unknown_preset: return "unknown-preset";
    case ErrorCode::missing_parameter: return "missing-parameter";
    case ErrorCode::unsupported_hom: return "unsupported-hom";
    case ErrorCode::invalid_label: return "invalid-label";
    case ErrorCode::frobenius_not_associative: return "frobenius-not-associative";
    case ErrorCode::frobenius_not_unital: return "frobenius-not-unital";
    case ErrorCode::frobenius_degenerate: return "frobenius-degenerate-trace";
    case ErrorCode::frobenius_not_symmetric: return "frobenius-not-symmetric";
    case ErrorCode::frobenius_incomplete: return "frobenius-incomplete";
    case ErrorCode::unassigned_generator: return "unassigned-generator";
    case ErrorCode::unassigned_parameter: return "unassigned-parameter";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::invalid_partition: return "invalid-partition";
    case ErrorCode::invalid_tableau: return "invalid-tableau";
    case ErrorCode::idempotent_mismatch: return "idempotent-mismatch";
    case ErrorCode::not_idempotent: return "not-idempotent";
    case ErrorCode::triple_condition: return "triple-condition";
    case ErrorCode::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax and type errors in text input carry the byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string const& what,
             ErrorCode code = ErrorCode::parse_error)
      : Error(code, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace diacat

#endif  // DIACAT_ERROR_HPP_
