#pragma once

#include <stdexcept>
#include <string>

namespace hopfforge {

// Every error raised by the library carries a short machine-readable kind
// (for reports and exit-code mapping) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  [[nodiscard]] const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define HOPFFORGE_ERROR(Name)                                              \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(#Name, what) {}         \
  }

HOPFFORGE_ERROR(DivisionByZero);
HOPFFORGE_ERROR(DimensionMismatch);
HOPFFORGE_ERROR(InvalidGroupDatum);
HOPFFORGE_ERROR(NotInvertible);
HOPFFORGE_ERROR(InvalidGroupLike);
HOPFFORGE_ERROR(UnsupportedModule);
HOPFFORGE_ERROR(BaseMismatch);
HOPFFORGE_ERROR(InvalidYDInput);
HOPFFORGE_ERROR(InvalidLiftingData);
HOPFFORGE_ERROR(CocycleCheckFailed);
HOPFFORGE_ERROR(NotACocycle);
HOPFFORGE_ERROR(ConfluenceFailure);
HOPFFORGE_ERROR(MismatchWitness);
HOPFFORGE_ERROR(ParseError);

#undef HOPFFORGE_ERROR

// Index-datum validation failure. `code` is one of NotInJ, CompatibilityFailed,
// EllNotOdd, EllOutOfRange, KNotOdd, MixedConditionFailed; s and t are the
// offending positions (or -1 when unused).
class ValidationError : public Error {
 public:
  ValidationError(std::string code, int s, int t, const std::string& what)
      : Error("ValidationError", code + " " + what), code_(std::move(code)), s_(s), t_(t) {}
  [[nodiscard]] const std::string& code() const noexcept { return code_; }
  [[nodiscard]] int s() const noexcept { return s_; }
  [[nodiscard]] int t() const noexcept { return t_; }

 private:
  std::string code_;
  int s_;
  int t_;
};

}  // namespace hopfforge
