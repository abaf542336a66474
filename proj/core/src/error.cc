#include "genspect/error.h"

namespace genspect {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kBalanceViolation: return "BalanceViolation";
    case ErrorCode::kUnknownLemma: return "UnknownLemma";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kRecursionDetected: return "RecursionDetected";
    case ErrorCode::kMissingOccSlot: return "MissingOccSlot";
    case ErrorCode::kMissingTriggerSlot: return "MissingTriggerSlot";
    case ErrorCode::kPositionMismatch: return "PositionMismatch";
    case ErrorCode::kUnlinkedTriggers: return "UnlinkedTriggers";
    case ErrorCode::kEmptySlotClass: return "EmptySlotClass";
    case ErrorCode::kEmptyQuadrant: return "EmptyQuadrant";
    case ErrorCode::kEmptyTokens: return "EmptyTokens";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kLanguageMismatch: return "LanguageMismatch";
    case ErrorCode::kIdMismatch: return "IdMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kUnknownDimension: return "UnknownDimension";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace genspect
