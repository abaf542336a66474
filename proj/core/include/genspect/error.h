#ifndef GENSPECT_ERROR_H_
#define GENSPECT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace genspect {

enum class ErrorCode {
  kMissingFile,
  kMalformedRow,
  kBalanceViolation,
  kUnknownLemma,
  kSyntaxError,
  kRecursionDetected,
  kMissingOccSlot,
  kMissingTriggerSlot,
  kPositionMismatch,
  kUnlinkedTriggers,
  kEmptySlotClass,
  kEmptyQuadrant,
  kEmptyTokens,
  kMalformedLine,
  kDuplicateId,
  kLanguageMismatch,
  kIdMismatch,
  kLengthMismatch,
  kUnknownDimension,
  kSchemaMismatch,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this one exception type; the
// code says which invariant was violated and what() carries the details.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace genspect

#endif  // GENSPECT_ERROR_H_
