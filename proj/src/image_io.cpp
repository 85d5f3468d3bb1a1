#include "magicstego/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

namespace magicstego {
namespace {

[[noreturn]] void io_fail(const std::filesystem::path& path, const std::string& why) {
  throw StegoError(ErrorCode::ImageIo, path.string() + ": " + why);
}

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail(path, "cannot open");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

RgbImage decode_png(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) {
    io_fail(path, std::string("PNG header: ") + img.message);
  }
  img.format = PNG_FORMAT_RGB;
  RgbImage out(img.width, img.height);
  auto buf = samples(out);
  png_color white{255, 255, 255};
  if (!png_image_finish_read(&img, &white, buf.data(), 0, nullptr)) {
    const std::string msg = img.message;
    png_image_free(&img);
    io_fail(path, "PNG data: " + msg);
  }
  return out;
}

// Binary PPM: "P6" <ws> width <ws> height <ws> maxval <single ws> raster.
RgbImage decode_ppm(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::size_t pos = 2;
  auto next_number = [&]() -> std::size_t {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) io_fail(path, "malformed PPM header");
    std::size_t v = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      v = v * 10 + (bytes[pos] - '0');
      if (v > (1u << 24)) io_fail(path, "PPM dimension too large");
      ++pos;
    }
    return v;
  };
  const std::size_t width = next_number();
  const std::size_t height = next_number();
  const std::size_t maxval = next_number();
  if (maxval != 255) io_fail(path, "only 8-bit PPM (maxval 255) is supported");
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) io_fail(path, "malformed PPM header");
  ++pos;
  const std::size_t need = width * height * 3;
  if (bytes.size() - pos < need) io_fail(path, "truncated PPM raster");
  RgbImage out(width, height);
  std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(pos), need, samples(out).begin());
  return out;
}

std::string lower_ext(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

}  // namespace

RgbImage read_image(const std::filesystem::path& path) {
  const auto bytes = slurp(path);
  static constexpr std::array<std::uint8_t, 8> kPngSig{0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (bytes.size() >= 8 && std::equal(kPngSig.begin(), kPngSig.end(), bytes.begin())) {
    return decode_png(path, bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') return decode_ppm(path, bytes);
  if (bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 && bytes[2] == 0xFF) {
    io_fail(path, "JPEG input is lossy; use PNG or PPM");
  }
  io_fail(path, "unrecognised image format (expected PNG or binary PPM)");
}

void write_image(const std::filesystem::path& path, const RgbImage& image) {
  const std::string ext = lower_ext(path);
  if (ext == ".png") {
    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    img.width = static_cast<png_uint_32>(image.width());
    img.height = static_cast<png_uint_32>(image.height());
    img.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&img, path.c_str(), 0, samples(image).data(), 0, nullptr)) {
      io_fail(path, std::string("PNG write: ") + img.message);
    }
    return;
  }
  if (ext == ".ppm") {
    std::ofstream out(path, std::ios::binary);
    if (!out) io_fail(path, "cannot open for writing");
    out << "P6\n" << image.width() << ' ' << image.height() << "\n255\n";
    const auto s = samples(image);
    out.write(reinterpret_cast<const char*>(s.data()), static_cast<std::streamsize>(s.size()));
    if (!out) io_fail(path, "write failed");
    return;
  }
  if (ext == ".jpg" || ext == ".jpeg" || ext == ".jpe" || ext == ".jfif" || ext == ".webp") {
    io_fail(path, "lossy output format refused; LSB payloads do not survive lossy coding");
  }
  io_fail(path, "unsupported output format (use .png or .ppm)");
}

}  // namespace magicstego
