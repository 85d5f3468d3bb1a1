#include "magicstego/error.hpp"

namespace magicstego {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IntensityDeltaTooLarge: return "IntensityDeltaTooLarge";
    case ErrorCode::OutOfGamut: return "OutOfGamut";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::EmptyKey: return "EmptyKey";
    case ErrorCode::UnalignedLength: return "UnalignedLength";
    case ErrorCode::BlockLengthMismatch: return "BlockLengthMismatch";
    case ErrorCode::OddDimensions: return "OddDimensions";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::TileMismatch: return "TileMismatch";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorCode::CorruptHeader: return "CorruptHeader";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ImageIo: return "ImageIo";
  }
  return "Unknown";
}

}  // namespace magicstego
