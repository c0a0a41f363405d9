#include "stanleylab/error.hpp"

namespace stanleylab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotAnchored: return "NotAnchored";
    case ErrorCode::NotLeftShifted: return "NotLeftShifted";
    case ErrorCode::NotRightShifted: return "NotRightShifted";
    case ErrorCode::RowsDisconnected: return "RowsDisconnected";
    case ErrorCode::NegativeOrZeroLength: return "NegativeOrZeroLength";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::Unbalanced: return "Unbalanced";
    case ErrorCode::BadLastDiagonal: return "BadLastDiagonal";
    case ErrorCode::DiagonalDrop: return "DiagonalDrop";
    case ErrorCode::DisconnectedColumns: return "DisconnectedColumns";
    case ErrorCode::NonMonotoneBoundary: return "NonMonotoneBoundary";
    case ErrorCode::NotPeakless: return "NotPeakless";
    case ErrorCode::ContainsTriple: return "ContainsTriple";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NoPreimage: return "NoPreimage";
    case ErrorCode::MultiplePreimages: return "MultiplePreimages";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnsoundSubstitution: return "UnsoundSubstitution";
    case ErrorCode::NoContraction: return "NoContraction";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::CancellationFailure: return "CancellationFailure";
    case ErrorCode::MismatchBetweenForms: return "MismatchBetweenForms";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace stanleylab
