#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace beic {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabelInEdge,
  EmptyEdge,
  NotAnAntichain,
  UnknownVertex,
  LabelCollision,
  ComplexityGuard,
  DescriptorMismatch,
  BlocksDontCoverEdges,
  ParseError,
  EdgeBudgetExhausted,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace beic
