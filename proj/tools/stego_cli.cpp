// magicstego: hide a payload in the intensity plane of a PNG/PPM image.
//
// Exit codes: 0 ok, 1 usage, 2 payload too large, 3 unreadable or lossy
// image, 4 bad geometry, 5 corrupt header / wrong key, 6 dimension mismatch.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magicstego/baselines.hpp"
#include "magicstego/embedder.hpp"
#include "magicstego/error.hpp"
#include "magicstego/image_io.hpp"
#include "magicstego/metrics.hpp"

namespace fs = std::filesystem;
using namespace magicstego;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kTooLarge = 2,
  kBadImage = 3,
  kBadGeometry = 4,
  kCorrupt = 5,
  kMismatch = 6,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::PayloadTooLarge:
    case ErrorCode::CapacityExceeded: return kTooLarge;
    case ErrorCode::ImageIo: return kBadImage;
    case ErrorCode::NonSquare:
    case ErrorCode::OddDimensions:
    case ErrorCode::TooSmall: return kBadGeometry;
    case ErrorCode::CorruptHeader: return kCorrupt;
    case ErrorCode::DimensionMismatch: return kMismatch;
    default: return kUsage;
  }
}

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read payload file " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes next to the destination and renames, so failures leave no partial file.
void write_bytes_atomic(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
  fs::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw UsageError("write failed for " + path.string());
    }
  }
  fs::rename(tmp, path);
}

std::string resolve_key(const std::optional<std::string>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("STEGO_KEY")) return env;
  throw UsageError("no key given: pass --key or set STEGO_KEY");
}

void print_report(const QualityReport& r, const std::string& format) {
  if (format == "csv") {
    std::cout << csv_header() << '\n' << to_csv_row(r) << '\n';
  } else if (format == "jsonl") {
    std::cout << to_jsonl(r) << '\n';
  } else {
    std::cout << to_text(r);
  }
}

// Classic-LSB container: 32-bit big-endian length, then payload bits.
BitString baseline_bits(const std::vector<std::uint8_t>& payload, unsigned k) {
  const auto len = static_cast<std::uint32_t>(payload.size());
  std::vector<std::uint8_t> framed{static_cast<std::uint8_t>(len >> 24),
                                   static_cast<std::uint8_t>(len >> 16),
                                   static_cast<std::uint8_t>(len >> 8),
                                   static_cast<std::uint8_t>(len)};
  framed.insert(framed.end(), payload.begin(), payload.end());
  BitString bits = BitString::from_bytes(framed);
  while (bits.size() % k != 0) bits.push_back(0);
  return bits;
}

std::vector<std::uint8_t> baseline_extract(const RgbImage& image, unsigned k) {
  const LsbConfig cfg{k};
  const std::size_t total = image.size() * 3 * k;
  if (total < 32) throw StegoError(ErrorCode::CorruptHeader, "image too small for a header");
  const auto be = classic_lsb_extract(image, 32, cfg).to_bytes();
  const std::uint64_t len = (std::uint64_t{be[0]} << 24) | (std::uint64_t{be[1]} << 16) |
                            (std::uint64_t{be[2]} << 8) | be[3];
  if (32 + 8 * len > total) {
    throw StegoError(ErrorCode::CorruptHeader, "decoded length exceeds LSB capacity");
  }
  auto bytes = classic_lsb_extract(image, 32 + 8 * len, cfg).to_bytes();
  bytes.erase(bytes.begin(), bytes.begin() + 4);
  return bytes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magic-square LSB steganography in the image intensity plane"};
  app.require_subcommand(1);

  std::string in_path, out_path, payload_path, stego_path, format = "text";
  std::optional<std::string> key;
  unsigned lsb_k = 1;
  std::optional<unsigned> extract_k;
  const auto formats = CLI::IsMember({"text", "csv", "jsonl"});

  auto* embed_cmd = app.add_subcommand("embed", "Hide a payload in a cover image");
  embed_cmd->add_option("--in", in_path, "Cover image (PNG or PPM)")->required();
  embed_cmd->add_option("--payload", payload_path, "Payload file")->required();
  embed_cmd->add_option("--out", out_path, "Stego image (.png or .ppm)")->required();
  embed_cmd->add_option("-k,--key", key, "Secret key (prefer STEGO_KEY)");
  embed_cmd->add_option("--format", format, "Report format")->check(formats);

  auto* extract_cmd = app.add_subcommand("extract", "Recover a payload from a stego image");
  extract_cmd->add_option("--in", in_path, "Stego image")->required();
  extract_cmd->add_option("--out", out_path, "Recovered payload file")->required();
  extract_cmd->add_option("-k,--key", key, "Secret key (prefer STEGO_KEY)");
  extract_cmd->add_option("--baseline-k", extract_k,
                          "Read a classic-LSB container written by 'baseline'")
      ->check(CLI::Range(1u, 5u));

  auto* capacity_cmd = app.add_subcommand("capacity", "Print payload capacity in bytes");
  capacity_cmd->add_option("--in", in_path, "Cover image")->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "Compare two images");
  metrics_cmd->add_option("--in", in_path, "Cover image")->required();
  metrics_cmd->add_option("--stego", stego_path, "Stego image")->required();
  metrics_cmd->add_option("--format", format, "Report format")->check(formats);

  auto* baseline_cmd = app.add_subcommand("baseline", "Classic k-bit LSB embedding");
  baseline_cmd->add_option("--in", in_path, "Cover image")->required();
  baseline_cmd->add_option("--payload", payload_path, "Payload file")->required();
  baseline_cmd->add_option("--out", out_path, "Stego image")->required();
  baseline_cmd->add_option("--k", lsb_k, "Bits per sample")->check(CLI::Range(1u, 5u));
  baseline_cmd->add_option("--key", key, "Ignored; accepted for symmetry with embed");
  baseline_cmd->add_option("--format", format, "Report format")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*embed_cmd) {
      const std::string k = resolve_key(key);
      const RgbImage cover = read_image(in_path);
      const std::size_t cap = capacity(cover.width(), cover.height());
      const auto payload = read_bytes(payload_path);
      const RgbImage stego = embed(cover, payload, key_view(k));
      write_image(out_path, stego);
      std::cerr << "embedded " << payload.size() << " of " << cap << " bytes\n";
      print_report(quality_report(cover, stego), format);
    } else if (*extract_cmd) {
      const RgbImage stego = read_image(in_path);
      std::vector<std::uint8_t> payload;
      if (extract_k) {
        payload = baseline_extract(stego, *extract_k);
      } else {
        const std::string k = resolve_key(key);
        payload = extract(stego, key_view(k));
      }
      write_bytes_atomic(out_path, payload);
      std::cerr << "recovered " << payload.size() << " bytes\n";
    } else if (*capacity_cmd) {
      const RgbImage image = read_image(in_path);
      std::cout << capacity(image.width(), image.height()) << '\n';
    } else if (*metrics_cmd) {
      const RgbImage a = read_image(in_path);
      const RgbImage b = read_image(stego_path);
      print_report(quality_report(a, b), format);
    } else if (*baseline_cmd) {
      const RgbImage cover = read_image(in_path);
      const auto payload = read_bytes(payload_path);
      const RgbImage stego = classic_lsb_embed(cover, baseline_bits(payload, lsb_k), {lsb_k});
      write_image(out_path, stego);
      print_report(quality_report(cover, stego), format);
    }
  } catch (const StegoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
