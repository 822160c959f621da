#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kforge {

// Input errors are the caller's fault (bad text, bad operator, bad arguments);
// numerical errors mean a pipeline could not reach a trustworthy answer.
enum class ErrorClass { Input, Numerical };

class Error : public std::runtime_error {
 public:
  Error(std::string kind, ErrorClass cls, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)), class_(cls) {}

  const std::string& kind() const noexcept { return kind_; }
  ErrorClass error_class() const noexcept { return class_; }

 private:
  std::string kind_;
  ErrorClass class_;
};

#define KFORGE_DEFINE_ERROR(Name, Cls)                                   \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(#Name, Cls, what) {}  \
  };

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error("SyntaxError", ErrorClass::Input,
              "syntax error at position " + std::to_string(position) +
                  ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

KFORGE_DEFINE_ERROR(NonPolynomialError, ErrorClass::Input)
KFORGE_DEFINE_ERROR(NotMUMError, ErrorClass::Input)
KFORGE_DEFINE_ERROR(ConstantQ0Error, ErrorClass::Input)
KFORGE_DEFINE_ERROR(DomainError, ErrorClass::Input)
KFORGE_DEFINE_ERROR(IntegerArgumentError, ErrorClass::Input)
KFORGE_DEFINE_ERROR(InsufficientDataError, ErrorClass::Input)
KFORGE_DEFINE_ERROR(ZeroConstantTermError, ErrorClass::Input)
KFORGE_DEFINE_ERROR(MemoryBudgetError, ErrorClass::Input)
KFORGE_DEFINE_ERROR(PrecisionError, ErrorClass::Input)
KFORGE_DEFINE_ERROR(TieError, ErrorClass::Numerical)
KFORGE_DEFINE_ERROR(NoSolutionError, ErrorClass::Numerical)
KFORGE_DEFINE_ERROR(AmbiguousError, ErrorClass::Numerical)
KFORGE_DEFINE_ERROR(NoOperatorError, ErrorClass::Numerical)
KFORGE_DEFINE_ERROR(SingularStepError, ErrorClass::Numerical)
KFORGE_DEFINE_ERROR(PathDisagreementError, ErrorClass::Numerical)

#undef KFORGE_DEFINE_ERROR

}  // namespace kforge
