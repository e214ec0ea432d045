#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holopi {

enum class ErrorKind {
  NegativeInput,
  MixedRadicand,
  DivisionByZero,
  NoClosedForm,
  NoRecurrence,
  LeadingCoefficientZero,
  NonzeroConstantTerm,
  NonUnitConstantTerm,
  OrderExceeded,
  OrderTooSmall,
  InsufficientTerms,
  TruncationTooSmall,
  NoRelationFound,
  DivergentSample,
  UnboundedContribution,
  DivergentParameter,
  FractionalOffset,
  QOutOfRange,
  RationalizationFailed,
  DivergenceDetected,
  UnknownId,
  CatalogError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::MixedRadicand: return "MixedRadicand";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoClosedForm: return "NoClosedForm";
    case ErrorKind::NoRecurrence: return "NoRecurrence";
    case ErrorKind::LeadingCoefficientZero: return "LeadingCoefficientZero";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::InsufficientTerms: return "InsufficientTerms";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NoRelationFound: return "NoRelationFound";
    case ErrorKind::DivergentSample: return "DivergentSample";
    case ErrorKind::UnboundedContribution: return "UnboundedContribution";
    case ErrorKind::DivergentParameter: return "DivergentParameter";
    case ErrorKind::FractionalOffset: return "FractionalOffset";
    case ErrorKind::QOutOfRange: return "QOutOfRange";
    case ErrorKind::RationalizationFailed: return "RationalizationFailed";
    case ErrorKind::DivergenceDetected: return "DivergenceDetected";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::CatalogError: return "CatalogError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace holopi
