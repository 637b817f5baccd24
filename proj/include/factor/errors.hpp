#pragma once

#include <stdexcept>
#include <string>

namespace factor {

enum class ErrorKind {
  InvalidVertex,
  SelfLoop,
  InvalidOrder,
  InvalidParameters,
  EmptyGraph,
  FormatError,
  NumericError,
  ConvergenceError,
  NotATree,
  CatalogTooSmall,
  TooLarge,
  NotConnected,
  InvalidPartition,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace factor
