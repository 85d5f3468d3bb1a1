#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "magicstego/embedder.hpp"
#include "magicstego/image_io.hpp"
#include "test_support.hpp"

using namespace magicstego;
namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "magicstego_cli_test";

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CliResult run(const std::string& args, const std::string& env = "") {
  const fs::path out = kDir / "stdout.txt", err = kDir / "stderr.txt";
  const std::string cmd = env + " " + MAGICSTEGO_CLI + std::string(" ") + args + " >" +
                          out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

fs::path write_cover(const std::string& name, std::size_t w, std::size_t h, unsigned seed) {
  testing_support::Rng rng(seed);
  const fs::path p = kDir / name;
  write_image(p, testing_support::random_image(rng, w, h));
  return p;
}

fs::path write_payload(const std::string& name, std::size_t n, unsigned seed) {
  testing_support::Rng rng(seed);
  const auto bytes = testing_support::random_bytes(rng, n);
  const fs::path p = kDir / name;
  std::ofstream(p, std::ios::binary)
      .write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(n));
  return p;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    fs::create_directories(kDir);
    cover256 = write_cover("cover256.png", 256, 256, 1);
    payload1k = write_payload("payload1k.bin", 1024, 2);
  }
  static inline fs::path cover256, payload1k;
};

}  // namespace

TEST_F(Cli, EmbedExtractRoundTripWithFlagKey) {
  const auto stego = kDir / "stego.png";
  const CliResult e = run("embed --in " + cover256.string() + " --payload " + payload1k.string() +
                    " --out " + stego.string() + " --key s3cret-key");
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("psnr="), std::string::npos);
  EXPECT_NE(e.err.find("1024 of 8176"), std::string::npos);
  EXPECT_EQ(e.out.find("s3cret-key"), std::string::npos);
  EXPECT_EQ(e.err.find("s3cret-key"), std::string::npos);

  const auto recovered = kDir / "recovered.bin";
  const CliResult x = run("extract --in " + stego.string() + " --out " + recovered.string() +
                    " -k s3cret-key");
  ASSERT_EQ(x.code, 0) << x.err;
  EXPECT_EQ(slurp(recovered), slurp(payload1k));
}

TEST_F(Cli, KeyFromEnvironmentAndDeterministicOutput) {
  const auto a = kDir / "env_a.png", b = kDir / "env_b.png";
  const std::string args = "embed --in " + cover256.string() + " --payload " + payload1k.string();
  ASSERT_EQ(run(args + " --out " + a.string(), "STEGO_KEY=envkey").code, 0);
  ASSERT_EQ(run(args + " --out " + b.string(), "STEGO_KEY=envkey").code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto rec = kDir / "env_rec.bin";
  ASSERT_EQ(run("extract --in " + a.string() + " --out " + rec.string(), "STEGO_KEY=envkey").code, 0);
  EXPECT_EQ(slurp(rec), slurp(payload1k));
}

TEST_F(Cli, MissingKeyIsUsageError) {
  const CliResult r = run("embed --in " + cover256.string() + " --payload " + payload1k.string() +
                        " --out " + (kDir / "nokey.png").string(),
                    "env -u STEGO_KEY");
  EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, PayloadTooLargeExitsTwo) {
  const auto big = write_payload("big.bin", 9000, 3);
  const CliResult r = run("embed --in " + cover256.string() + " --payload " + big.string() +
                    " --out " + (kDir / "big.png").string() + " -k k");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("8176"), std::string::npos);
}

TEST_F(Cli, BadGeometryExitsFour) {
  const auto rect = write_cover("rect.png", 64, 32, 4);
  EXPECT_EQ(run("embed --in " + rect.string() + " --payload " + payload1k.string() +
                " --out " + (kDir / "r.png").string() + " -k k").code,
            4);
  EXPECT_EQ(run("capacity --in " + rect.string()).code, 4);
}

TEST_F(Cli, LossyOutputAndBadInputExitThree) {
  EXPECT_EQ(run("embed --in " + cover256.string() + " --payload " + payload1k.string() +
                " --out " + (kDir / "x.jpg").string() + " -k k").code,
            3);
  const auto truncated = kDir / "truncated.png";
  fs::copy_file(cover256, truncated, fs::copy_options::overwrite_existing);
  fs::resize_file(truncated, fs::file_size(truncated) / 3);
  EXPECT_EQ(run("extract --in " + truncated.string() + " --out " + (kDir / "t.bin").string() +
                " -k k").code,
            3);
}

TEST_F(Cli, WrongKeyExitsFiveWithoutOutput) {
  const auto stego = kDir / "wk.png";
  ASSERT_EQ(run("embed --in " + cover256.string() + " --payload " + payload1k.string() +
                " --out " + stego.string() + " -k right").code,
            0);
  const auto out = kDir / "wk.bin";
  fs::remove(out);
  int fives = 0;
  for (const char* key : {"wrong", "Right", "righu", "r", "another-key"}) {
    const CliResult r = run("extract --in " + stego.string() + " --out " + out.string() + " -k " + key);
    if (r.code == 5) {
      ++fives;
      EXPECT_FALSE(fs::exists(out));
      EXPECT_FALSE(fs::exists(kDir / "wk.bin.partial"));
    } else {
      ASSERT_EQ(r.code, 0);
      EXPECT_NE(slurp(out), slurp(payload1k));
      fs::remove(out);
    }
  }
  EXPECT_GE(fives, 4);
}

TEST_F(Cli, CapacityValues) {
  EXPECT_EQ(run("capacity --in " + cover256.string()).out, "8176\n");
  EXPECT_EQ(run("capacity --in " + write_cover("c128.ppm", 128, 128, 5).string()).out, "2032\n");
  EXPECT_EQ(run("capacity --in " + write_cover("c6.png", 6, 6, 6).string()).out, "0\n");
}

TEST_F(Cli, MetricsFormats) {
  const CliResult same = run("metrics --in " + cover256.string() + " --stego " + cover256.string());
  ASSERT_EQ(same.code, 0);
  EXPECT_EQ(same.out, "mse=0\npsnr=100\nssim=1\nncc=1\nmae=0\n");

  const auto stego = kDir / "m_stego.png";
  ASSERT_EQ(run("embed --in " + cover256.string() + " --payload " + payload1k.string() +
                " --out " + stego.string() + " -k metrics").code,
            0);
  const CliResult csv = run("metrics --in " + cover256.string() + " --stego " + stego.string() +
                      " --format csv");
  ASSERT_EQ(csv.code, 0);
  std::istringstream lines(csv.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "mse,psnr,ssim,ncc,mae");
  const double psnr_value = std::stod(row.substr(row.find(',') + 1));
  EXPECT_GT(psnr_value, 50.0);

  const CliResult jl = run("metrics --in " + cover256.string() + " --stego " + stego.string() +
                     " --format jsonl");
  ASSERT_EQ(jl.code, 0);
  for (const char* key : {"\"mse\"", "\"psnr\"", "\"ssim\"", "\"ncc\"", "\"mae\""}) {
    EXPECT_NE(jl.out.find(key), std::string::npos);
  }

  const auto small = write_cover("small.png", 32, 32, 7);
  EXPECT_EQ(run("metrics --in " + cover256.string() + " --stego " + small.string()).code, 6);
}

TEST_F(Cli, BaselineTrendAndRoundTrip) {
  double prev = 1e9;
  for (int k = 1; k <= 5; ++k) {
    const auto out = kDir / ("base" + std::to_string(k) + ".png");
    const CliResult r = run("baseline --in " + cover256.string() + " --payload " + payload1k.string() +
                      " --out " + out.string() + " --k " + std::to_string(k) + " --format csv");
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string row = r.out.substr(r.out.find('\n') + 1);
    const double p = std::stod(row.substr(row.find(',') + 1));
    EXPECT_LE(p, prev) << "k=" << k;
    prev = p;
  }
  const auto rec = kDir / "base_rec.bin";
  ASSERT_EQ(run("extract --in " + (kDir / "base1.png").string() + " --out " + rec.string() +
                " --baseline-k 1").code,
            0);
  EXPECT_EQ(slurp(rec), slurp(payload1k));

  EXPECT_EQ(run("baseline --in " + cover256.string() + " --payload " + payload1k.string() +
                " --out " + (kDir / "b0.png").string() + " --k 0").code,
            1);
  const auto huge = write_payload("huge.bin", 200000, 8);
  EXPECT_EQ(run("baseline --in " + cover256.string() + " --payload " + huge.string() +
                " --out " + (kDir / "bh.png").string() + " --k 1").code,
            2);
}
