#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace flagcodes {

/// Failure categories raised by the library. Each maps to one precondition
/// or invariant of a public operation.
enum class Errc {
  NonPrimeCharacteristic,
  FieldTooLarge,
  MixedFields,
  DivisionByZero,
  ZeroElement,
  ShapeMismatch,
  SingularMatrix,
  AmbientMismatch,
  BadDimensions,
  EnumerationTooLarge,
  NotMonic,
  FieldMismatch,
  NotADivisor,
  DegreeMismatch,
  NotNested,
  BadType,
  TypeMismatch,
  IndexOutOfRange,
  AdditivityViolated,
  GcdConditionFailed,
  KTooSmall,
  RankDeficient,
  NotExtending,
  EmptyCode,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed code file; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace flagcodes
