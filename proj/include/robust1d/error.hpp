#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace robust1d {

enum class ErrorKind {
  EmptyInput,
  NonFinite,
  BadWeight,
  TooLarge,
  OutOfRange,
  EmptyVector,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind; `what()` is a one-line message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace robust1d
