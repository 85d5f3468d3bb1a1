#pragma once

#include <string>

#include "magicstego/image.hpp"

namespace magicstego {

/// PSNR reported for identical images.
inline constexpr double kPsnrCap = 100.0;

struct QualityReport {
  double mse = 0.0;
  double psnr = kPsnrCap;
  double ssim = 1.0;
  double ncc = 1.0;
  double mae = 0.0;
};

// All metrics run over every R, G, B sample and throw DimensionMismatch when
// the images differ in size.

double mse(const RgbImage& cover, const RgbImage& stego);

/// 10 log10(C^2 / MSE), C = largest sample value across both images.
/// Identical images give kPsnrCap.
double psnr(const RgbImage& cover, const RgbImage& stego);

/// Single-window (whole image) SSIM per channel, averaged over R, G, B.
/// C1 = (0.01*255)^2, C2 = (0.03*255)^2.
double ssim(const RgbImage& cover, const RgbImage& stego);

/// sum(S*C) / sum(S^2): normalised by stego energy. Throws ZeroDenominator for
/// an all-zero stego image.
double ncc(const RgbImage& cover, const RgbImage& stego);

double mae(const RgbImage& cover, const RgbImage& stego);

QualityReport quality_report(const RgbImage& cover, const RgbImage& stego);

// Serialisations. Field order is always mse, psnr, ssim, ncc, mae.
std::string to_text(const QualityReport& r);
std::string csv_header();
std::string to_csv_row(const QualityReport& r);
std::string to_jsonl(const QualityReport& r);

}  // namespace magicstego
