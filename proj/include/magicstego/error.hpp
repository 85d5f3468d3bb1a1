#pragma once

#include <stdexcept>
#include <string>

namespace magicstego {

enum class ErrorCode {
  DimensionMismatch,
  IntensityDeltaTooLarge,
  OutOfGamut,
  UnsupportedOrder,
  EmptyKey,
  UnalignedLength,
  BlockLengthMismatch,
  OddDimensions,
  NonSquare,
  TileMismatch,
  TooSmall,
  CapacityExceeded,
  PayloadTooLarge,
  CorruptHeader,
  ZeroDenominator,
  InvalidConfig,
  ImageIo,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; callers branch on code().
class StegoError : public std::runtime_error {
 public:
  StegoError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace magicstego
