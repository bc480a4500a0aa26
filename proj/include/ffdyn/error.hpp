#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffdyn {

// Every failure mode of the library. The CLI maps each kind to its own exit
// code, so the order here is part of the command-line contract.
enum class ErrorKind {
  ParseError = 1,
  InvalidConfig,
  DivisionByZero,
  InvalidDegree,
  NotIrrational,
  UnsupportedCharacteristic,
  PrecisionExhausted,
  DomainError,
  NotRealQuadratic,
  PeriodNotFound,
  NoEmbedding,
  NotLoxodromic,
  PeriodSearchExhausted,
  NotInGammaInfty,
  BudgetExceeded,
  OutOfRange,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind), message_(what) {}
  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ffdyn
