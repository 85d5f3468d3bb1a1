#include "magicstego/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <vector>

#include "json.hpp"

#include "magicstego/kernels.hpp"

namespace magicstego {
namespace {

void check_dims(const RgbImage& a, const RgbImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw StegoError(ErrorCode::DimensionMismatch, "images differ in dimensions");
  }
}

kernels::Moments sample_moments(const RgbImage& cover, const RgbImage& stego) {
  check_dims(cover, stego);
  const auto a = samples(cover);
  const auto b = samples(stego);
  return kernels::active_table().moments(a.data(), b.data(), a.size());
}

double mse_from(const kernels::Moments& m) {
  return m.count == 0 ? 0.0
                      : static_cast<double>(m.sum_sq_diff) / static_cast<double>(m.count);
}

double psnr_from(const kernels::Moments& m) {
  if (m.sum_sq_diff == 0) return kPsnrCap;
  const double peak = std::max(m.max_a, m.max_b);
  return 10.0 * std::log10(peak * peak / mse_from(m));
}

double mae_from(const kernels::Moments& m) {
  return m.count == 0 ? 0.0
                      : static_cast<double>(m.sum_abs_diff) / static_cast<double>(m.count);
}

double ncc_from(const kernels::Moments& m) {
  if (m.sum_bb == 0) {
    throw StegoError(ErrorCode::ZeroDenominator, "stego image has zero energy");
  }
  return static_cast<double>(m.sum_ab) / static_cast<double>(m.sum_bb);
}

double ssim_channel(const kernels::Moments& m) {
  constexpr double c1 = (0.01 * 255) * (0.01 * 255);
  constexpr double c2 = (0.03 * 255) * (0.03 * 255);
  const double n = static_cast<double>(m.count);
  const double mu_x = static_cast<double>(m.sum_a) / n;
  const double mu_y = static_cast<double>(m.sum_b) / n;
  const double var_x = static_cast<double>(m.sum_aa) / n - mu_x * mu_x;
  const double var_y = static_cast<double>(m.sum_bb) / n - mu_y * mu_y;
  const double cov = static_cast<double>(m.sum_ab) / n - mu_x * mu_y;
  return ((2 * mu_x * mu_y + c1) * (2 * cov + c2)) /
         ((mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

double mse(const RgbImage& cover, const RgbImage& stego) {
  return mse_from(sample_moments(cover, stego));
}

double psnr(const RgbImage& cover, const RgbImage& stego) {
  return psnr_from(sample_moments(cover, stego));
}

double mae(const RgbImage& cover, const RgbImage& stego) {
  return mae_from(sample_moments(cover, stego));
}

double ncc(const RgbImage& cover, const RgbImage& stego) {
  return ncc_from(sample_moments(cover, stego));
}

double ssim(const RgbImage& cover, const RgbImage& stego) {
  check_dims(cover, stego);
  const std::size_t n = cover.size();
  if (n == 0) return 1.0;
  const auto& k = kernels::active_table();
  std::array<std::vector<std::uint8_t>, 3> a, b;
  for (auto* planes : {&a, &b}) {
    for (auto& p : *planes) p.resize(n);
  }
  k.deinterleave(samples(cover).data(), a[0].data(), a[1].data(), a[2].data(), n);
  k.deinterleave(samples(stego).data(), b[0].data(), b[1].data(), b[2].data(), n);
  double total = 0.0;
  for (std::size_t c = 0; c < 3; ++c) total += ssim_channel(k.moments(a[c].data(), b[c].data(), n));
  return total / 3.0;
}

QualityReport quality_report(const RgbImage& cover, const RgbImage& stego) {
  const kernels::Moments m = sample_moments(cover, stego);
  QualityReport r;
  r.mse = mse_from(m);
  r.psnr = psnr_from(m);
  r.ssim = ssim(cover, stego);
  r.ncc = ncc_from(m);
  r.mae = mae_from(m);
  return r;
}

std::string to_text(const QualityReport& r) {
  return "mse=" + fmt(r.mse) + "\npsnr=" + fmt(r.psnr) + "\nssim=" + fmt(r.ssim) +
         "\nncc=" + fmt(r.ncc) + "\nmae=" + fmt(r.mae) + "\n";
}

std::string csv_header() { return "mse,psnr,ssim,ncc,mae"; }

std::string to_csv_row(const QualityReport& r) {
  return fmt(r.mse) + "," + fmt(r.psnr) + "," + fmt(r.ssim) + "," + fmt(r.ncc) + "," +
         fmt(r.mae);
}

std::string to_jsonl(const QualityReport& r) {
  nlohmann::ordered_json j;
  j["mse"] = r.mse;
  j["psnr"] = r.psnr;
  j["ssim"] = r.ssim;
  j["ncc"] = r.ncc;
  j["mae"] = r.mae;
  return j.dump();
}

}  // namespace magicstego
