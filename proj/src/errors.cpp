#include "lhemb/errors.hpp"

namespace lhemb {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::LoopForbidden: return "LoopForbidden";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::HasLoops: return "HasLoops";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NotGenusZero: return "NotGenusZero";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorCode::NotLocallyHamiltonian: return "NotLocallyHamiltonian";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::NonSimpleVertex: return "NonSimpleVertex";
    case ErrorCode::RangeTooLarge: return "RangeTooLarge";
    case ErrorCode::BadAttachmentVertex: return "BadAttachmentVertex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

int error_exit_code(ErrorCode c) {
  // 0 = success, 1 = verification found violations; errors start at 10.
  return 10 + static_cast<int>(c);
}

}  // namespace lhemb
