#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include <json.hpp>

#include "support/files.hpp"
#include "support/synth.hpp"
#include "wetpaper/bitmap.hpp"
#include "wetpaper/cli.hpp"

using namespace wetpaper;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Workdir {
 public:
  Workdir() : root_(fs::temp_directory_path() / ("wetpaper_cli_" + std::to_string(std::random_device{}()))) {
    fs::create_directories(root_);
  }
  ~Workdir() { fs::remove_all(root_); }

  std::string path(const std::string& name) const { return (root_ / name).string(); }

  void write(const std::string& name, std::span<const std::uint8_t> data) const {
    std::ofstream(path(name), std::ios::binary)
        .write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  }
  std::vector<std::uint8_t> read(const std::string& name) const { return wetpaper::testing::slurp(path(name)); }

 private:
  fs::path root_;
};

std::vector<std::uint8_t> random_bytes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> data(n);
  for (auto& b : data) b = static_cast<std::uint8_t>(rng());
  return data;
}

}  // namespace

TEST_CASE("cli embed and extract roundtrip message bytes") {
  Workdir dir;
  const BinaryImage cover = wetpaper::testing::sample_page();
  dir.write("cover.pbm", serialize_pbm(cover, PbmFormat::P4));

  const Run cap = cli_run({"capacity", "--key", "hex:00ff10", "--in", dir.path("cover.pbm")});
  REQUIRE(cap.code == cli::kOk);
  const auto report = nlohmann::json::parse(cap.out);
  CHECK(report["N_A"] == 16);
  std::size_t sum = 0;
  for (const auto& a : report["areas"]) sum += a["q_p"].get<std::size_t>();
  CHECK(report["N_E"] == sum);

  const std::size_t capacity_bytes = report["N_E"].get<std::size_t>() / 8;
  const auto message = random_bytes(capacity_bytes, 1);
  dir.write("msg.bin", message);
  const Run embedded = cli_run({"embed", "--key", "hex:00ff10", "--in", dir.path("cover.pbm"), "--msg",
                                dir.path("msg.bin"), "--out", dir.path("stego.pbm"), "--report",
                                dir.path("report.json")});
  REQUIRE(embedded.code == cli::kOk);
  CHECK(pbm_format(dir.read("stego.pbm")) == PbmFormat::P4);
  const auto embed_report = nlohmann::json::parse(dir.read("report.json"));
  CHECK(embed_report["N_E"] == capacity_bytes * 8);

  const Run extracted = cli_run({"extract", "--key", "hex:00ff10", "--in", dir.path("stego.pbm"), "--out",
                                 dir.path("out.bin")});
  REQUIRE(extracted.code == cli::kOk);
  CHECK(dir.read("out.bin") == message);
  CHECK(extracted.err == std::to_string(capacity_bytes * 8) + " bits\n");

  // Identical inputs give identical bytes.
  REQUIRE(cli_run({"embed", "--key", "hex:00ff10", "--in", dir.path("cover.pbm"), "--msg", dir.path("msg.bin"),
                   "--out", dir.path("stego2.pbm")})
              .code == cli::kOk);
  CHECK(dir.read("stego2.pbm") == dir.read("stego.pbm"));

  // Too long by one byte beyond whole-byte capacity.
  dir.write("big.bin", random_bytes(report["N_E"].get<std::size_t>() / 8 + 1, 2));
  const Run too_long = cli_run({"embed", "--key", "hex:00ff10", "--in", dir.path("cover.pbm"), "--msg",
                                dir.path("big.bin"), "--out", dir.path("x.pbm")});
  CHECK(too_long.code == cli::kCapacity);
  CHECK(too_long.err.find("capacity") != std::string::npos);
}

TEST_CASE("cli keeps the P1 variant and honours --format") {
  Workdir dir;
  dir.write("cover.pbm", serialize_pbm(wetpaper::testing::text_like_image(128, 64, 3), PbmFormat::P1));
  const std::vector<std::uint8_t> message{'h', 'i'};
  dir.write("msg.bin", message);
  REQUIRE(cli_run({"embed", "--key", "k", "--in", dir.path("cover.pbm"), "--msg", dir.path("msg.bin"), "--out",
                   dir.path("stego.pbm")})
              .code == cli::kOk);
  CHECK(pbm_format(dir.read("stego.pbm")) == PbmFormat::P1);
  REQUIRE(cli_run({"embed", "--key", "k", "--in", dir.path("cover.pbm"), "--msg", dir.path("msg.bin"), "--out",
                   dir.path("stego4.pbm"), "--format", "p4"})
              .code == cli::kOk);
  CHECK(pbm_format(dir.read("stego4.pbm")) == PbmFormat::P4);
  CHECK(parse_pbm(dir.read("stego4.pbm")) == parse_pbm(dir.read("stego.pbm")));
  REQUIRE(cli_run({"extract", "--key", "k", "--in", dir.path("stego.pbm"), "--out", dir.path("m.out")}).code ==
          cli::kOk);
  CHECK(dir.read("m.out") == message);
}

TEST_CASE("cli empty message gives empty output") {
  Workdir dir;
  dir.write("cover.pbm", serialize_pbm(wetpaper::testing::text_like_image(64, 64, 5), PbmFormat::P4));
  dir.write("empty.bin", std::vector<std::uint8_t>{});
  REQUIRE(cli_run({"embed", "--key", "k", "--in", dir.path("cover.pbm"), "--msg", dir.path("empty.bin"), "--out",
                   dir.path("stego.pbm")})
              .code == cli::kOk);
  const Run r = cli_run({"extract", "--key", "k", "--in", dir.path("stego.pbm"), "--out", dir.path("m.out")});
  CHECK(r.code == cli::kOk);
  CHECK(r.err == "0 bits\n");
  CHECK(dir.read("m.out").empty());
}

TEST_CASE("cli analyze writes the mask") {
  Workdir dir;
  const BinaryImage img = wetpaper::testing::text_like_image(90, 70, 8);
  dir.write("img.pbm", serialize_pbm(img, PbmFormat::P4));
  const Run r = cli_run({"analyze", "--in", dir.path("img.pbm"), "--out", dir.path("mask.pbm")});
  REQUIRE(r.code == cli::kOk);
  const BinaryImage mask = parse_pbm(dir.read("mask.pbm"));
  CHECK(mask.width() == img.width());
  CHECK(mask.height() == img.height());
  CHECK(r.out == "N_FP " + std::to_string(mask.black_count()) + "\n");
  CHECK(mask.black_count() > 0);

  dir.write("white.pbm", serialize_pbm(BinaryImage(20, 20), PbmFormat::P1));
  const Run w = cli_run({"analyze", "--in", dir.path("white.pbm"), "--out", dir.path("wmask.pbm")});
  REQUIRE(w.code == cli::kOk);
  CHECK(w.out == "N_FP 0\n");
  CHECK(parse_pbm(dir.read("wmask.pbm")).black_count() == 0);
  CHECK(pbm_format(dir.read("wmask.pbm")) == PbmFormat::P1);
}

TEST_CASE("cli exit codes") {
  Workdir dir;
  dir.write("white.pbm", serialize_pbm(BinaryImage(128, 128), PbmFormat::P4));
  dir.write("junk.pbm", std::vector<std::uint8_t>{'G', 'I', 'F', '8'});
  dir.write("msg.bin", std::vector<std::uint8_t>{1, 2, 3});

  CHECK(cli_run({"capacity", "--key", "k", "--in", dir.path("white.pbm")}).code == cli::kCapacity);
  CHECK(cli_run({"embed", "--key", "k", "--in", dir.path("white.pbm"), "--msg", dir.path("msg.bin"), "--out",
                 dir.path("o.pbm")})
            .code == cli::kCapacity);
  CHECK(cli_run({"extract", "--key", "k", "--in", dir.path("junk.pbm"), "--out", dir.path("o")}).code ==
        cli::kParseOrIo);
  CHECK(cli_run({"extract", "--key", "k", "--in", dir.path("missing.pbm"), "--out", dir.path("o")}).code ==
        cli::kParseOrIo);
  CHECK(cli_run({"analyze", "--in", dir.path("junk.pbm"), "--out", dir.path("o")}).code == cli::kParseOrIo);

  const Run no_key = cli_run({"embed", "--in", dir.path("white.pbm"), "--msg", dir.path("msg.bin"), "--out", "x"});
  CHECK(no_key.code == cli::kUsage);
  CHECK(no_key.err.find("--key") != std::string::npos);
  CHECK(cli_run({}).code == cli::kUsage);
  CHECK(cli_run({"frobnicate"}).code == cli::kUsage);
  CHECK(cli_run({"capacity", "--key", "hex:xyz", "--in", dir.path("white.pbm")}).code == cli::kUsage);
  CHECK(cli_run({"capacity", "--key", "", "--in", dir.path("white.pbm")}).code == cli::kUsage);
  CHECK(cli_run({"analyze", "--in", dir.path("white.pbm"), "--out", "x", "--format", "png"}).code == cli::kUsage);
  CHECK(cli_run({"--help"}).code == cli::kOk);
}
