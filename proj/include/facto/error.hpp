#ifndef FACTO_ERROR_HPP
#define FACTO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace facto {

enum class ErrorKind {
  InvalidPermutation,
  ParseError,
  CapExceeded,
  PositionOutOfRange,
  NotAmple,
  GeneratingPrecondition,
  NonConstantEvaluation,
  DivisibilityViolation,
  PartitionViolation,
  NotAGroup,
  InsufficientData,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  static const char* kind_name(ErrorKind k) {
    switch (k) {
      case ErrorKind::InvalidPermutation: return "InvalidPermutation";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::CapExceeded: return "CapExceeded";
      case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
      case ErrorKind::NotAmple: return "NotAmple";
      case ErrorKind::GeneratingPrecondition: return "GeneratingPrecondition";
      case ErrorKind::NonConstantEvaluation: return "NonConstantEvaluation";
      case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
      case ErrorKind::PartitionViolation: return "PartitionViolation";
      case ErrorKind::NotAGroup: return "NotAGroup";
      case ErrorKind::InsufficientData: return "InsufficientData";
      case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
  }

private:
  ErrorKind kind_;
};

// Tri-state verdict for capped searches. Capped exploration never reports
// equality or inequality beyond what invariants certify.
enum class Tri { no, yes, undecided };

struct Caps {
  std::uint64_t orbit = 10'000'000;    // visited tuples in one orbit closure
  std::uint64_t tuples = 10'000'000;   // enumerated tuples per class count
  std::uint64_t universe = 5'000'000;  // word-universe size
  int rounds = 64;                     // partition refinement rounds
  int pad = 8;                         // stabilization padding attempts
};

}  // namespace facto

#endif
