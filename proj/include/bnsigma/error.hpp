#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bnsigma {

enum class ErrorKind {
  Syntax,
  Validation,
  Precondition,
  OutOfRange,
  FreeCancellation,
  NotAnImage,
  VerificationFailure,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bnsigma
