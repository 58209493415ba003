#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dlorder {

// Base of every error raised by the library. Tools map it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

#define DLORDER_DEFINE_ERROR(Name) \
  class Name : public Error {      \
   public:                         \
    using Error::Error;            \
  }

DLORDER_DEFINE_ERROR(UnsupportedConstruct);
DLORDER_DEFINE_ERROR(ConfigError);
DLORDER_DEFINE_ERROR(CapacityError);
DLORDER_DEFINE_ERROR(InsufficientData);
DLORDER_DEFINE_ERROR(MissingFeatures);
DLORDER_DEFINE_ERROR(DegenerateData);
DLORDER_DEFINE_ERROR(SingleClass);
DLORDER_DEFINE_ERROR(TooFewExamples);
DLORDER_DEFINE_ERROR(VersionMismatch);
DLORDER_DEFINE_ERROR(CorruptModel);
DLORDER_DEFINE_ERROR(GenerationError);
DLORDER_DEFINE_ERROR(MismatchedIds);
DLORDER_DEFINE_ERROR(IoError);

#undef DLORDER_DEFINE_ERROR

}  // namespace dlorder
