#include "beic/errors.hpp"

namespace beic {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabelInEdge: return "UnknownLabelInEdge";
    case ErrorKind::EmptyEdge: return "EmptyEdge";
    case ErrorKind::NotAnAntichain: return "NotAnAntichain";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::LabelCollision: return "LabelCollision";
    case ErrorKind::ComplexityGuard: return "ComplexityGuard";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::BlocksDontCoverEdges: return "BlocksDontCoverEdges";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EdgeBudgetExhausted: return "EdgeBudgetExhausted";
  }
  return "Error";
}

}  // namespace beic
