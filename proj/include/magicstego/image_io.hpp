#pragma once

#include <filesystem>

#include "magicstego/image.hpp"

namespace magicstego {

/// Reads PNG or binary PPM (P6, maxval 255), detected by signature. Alpha is
/// composited away and 16-bit PNG samples are reduced to 8 bits. Throws
/// StegoError(ImageIo) for unreadable, truncated, or unsupported files.
RgbImage read_image(const std::filesystem::path& path);

/// Writes PNG or PPM chosen by extension. Lossy targets (.jpg, .jpeg, ...)
/// are refused: LSB payloads do not survive lossy coding.
void write_image(const std::filesystem::path& path, const RgbImage& image);

}  // namespace magicstego
