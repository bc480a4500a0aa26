#include "ffdyn/error.hpp"

namespace ffdyn {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::NotIrrational: return "NotIrrational";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotRealQuadratic: return "NotRealQuadratic";
    case ErrorKind::PeriodNotFound: return "PeriodNotFound";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::NotLoxodromic: return "NotLoxodromic";
    case ErrorKind::PeriodSearchExhausted: return "PeriodSearchExhausted";
    case ErrorKind::NotInGammaInfty: return "NotInGammaInfty";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
  }
  return "UnknownError";
}

}  // namespace ffdyn
