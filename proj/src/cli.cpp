#include "wetpaper/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "wetpaper/bitmap.hpp"
#include "wetpaper/bits.hpp"
#include "wetpaper/errors.hpp"
#include "wetpaper/flippability.hpp"
#include "wetpaper/pipeline.hpp"
#include "wetpaper/report.hpp"

namespace wetpaper::cli {

namespace {

// I/O failure; mapped to kParseOrIo.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad flag values discovered after CLI11 has accepted the syntax.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path);
  return data;
}

void write_file(const std::string& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("cannot write " + path);
}

void write_file(const std::string& path, std::string_view text) {
  write_file(path, std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

struct Loaded {
  BinaryImage image;
  PbmFormat format;
};

Loaded load_pbm(const std::string& path) {
  const auto data = read_file(path);
  const PbmFormat format = pbm_format(data);
  return {parse_pbm(data), format};
}

StegoKey parse_key(const std::string& spec) {
  try {
    return StegoKey::parse(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--key: ") + e.what());
  }
}

std::optional<PbmFormat> parse_format(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "p1" || name == "P1") return PbmFormat::P1;
  if (name == "p4" || name == "P4") return PbmFormat::P4;
  throw UsageError("--format must be p1 or p4");
}

struct Options {
  std::string key;
  std::string in;
  std::string out;
  std::string msg;
  std::string report;
  std::string format;
};

int run_embed(const Options& o, std::ostream& err) {
  const StegoKey key = parse_key(o.key);
  const auto out_format = parse_format(o.format);
  const Loaded cover = load_pbm(o.in);
  const Bits message = unpack_bytes(read_file(o.msg));
  const EmbedOutcome result = embed(cover.image, key, message);
  write_file(o.out, serialize_pbm(result.image, out_format.value_or(cover.format)));
  if (!o.report.empty()) write_file(o.report, report_to_json(result.report) + "\n");
  err << "embedded " << result.report.embedded << " bits into " << result.report.areas << " areas\n";
  return kOk;
}

int run_extract(const Options& o, std::ostream& err) {
  const StegoKey key = parse_key(o.key);
  const Loaded stego = load_pbm(o.in);
  const Bits message = extract(stego.image, key);
  write_file(o.out, pack_bits(message));
  err << message.size() << " bits\n";
  return kOk;
}

int run_capacity(const Options& o, std::ostream& out) {
  const StegoKey key = parse_key(o.key);
  const Loaded cover = load_pbm(o.in);
  const std::string json = report_to_json(capacity(cover.image, key));
  out << json << "\n";
  if (!o.report.empty()) write_file(o.report, json + "\n");
  return kOk;
}

int run_analyze(const Options& o, std::ostream& out) {
  const auto out_format = parse_format(o.format);
  const Loaded img = load_pbm(o.in);
  if (img.image.width() < 3 || img.image.height() < 3) {
    throw IoError("analyze needs an image of at least 3x3 pixels");
  }
  const FlippabilityMask mask = compute_mask(img.image);
  write_file(o.out, serialize_pbm(mask_image(mask), out_format.value_or(img.format)));
  out << "N_FP " << mask.size() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wet paper code watermarking for 1-bit PBM images", "wetpaper"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Options o;
  auto* embed_cmd = app.add_subcommand("embed", "Hide a message file in a cover image");
  embed_cmd->add_option("--key", o.key, "Stego key: text, or hex:<digits>")->required();
  embed_cmd->add_option("--in", o.in, "Cover PBM")->required();
  embed_cmd->add_option("--msg", o.msg, "Message file")->required();
  embed_cmd->add_option("--out", o.out, "Stego PBM to write")->required();
  embed_cmd->add_option("--report", o.report, "Write the embed report as JSON");
  embed_cmd->add_option("--format", o.format, "Output variant p1|p4 (default: same as input)");

  auto* extract_cmd = app.add_subcommand("extract", "Recover the message from a stego image");
  extract_cmd->add_option("--key", o.key, "Stego key: text, or hex:<digits>")->required();
  extract_cmd->add_option("--in", o.in, "Stego PBM")->required();
  extract_cmd->add_option("--out", o.out, "File receiving the message bytes")->required();

  auto* capacity_cmd = app.add_subcommand("capacity", "Report per-area payload capacity as JSON");
  capacity_cmd->add_option("--key", o.key, "Stego key: text, or hex:<digits>")->required();
  capacity_cmd->add_option("--in", o.in, "Cover PBM")->required();
  capacity_cmd->add_option("--report", o.report, "Also write the JSON report to a file");

  auto* analyze_cmd = app.add_subcommand("analyze", "Write the flippability mask as a PBM");
  analyze_cmd->add_option("--in", o.in, "Input PBM")->required();
  analyze_cmd->add_option("--out", o.out, "Mask PBM to write (flippable = black)")->required();
  analyze_cmd->add_option("--format", o.format, "Output variant p1|p4 (default: same as input)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "wetpaper: usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (embed_cmd->parsed()) return run_embed(o, err);
    if (extract_cmd->parsed()) return run_extract(o, err);
    if (capacity_cmd->parsed()) return run_capacity(o, out);
    return run_analyze(o, out);
  } catch (const UsageError& e) {
    err << "wetpaper: usage: " << e.what() << "\n";
    return kUsage;
  } catch (const MessageTooLong& e) {
    err << "wetpaper: capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const HeaderCapacity& e) {
    err << "wetpaper: capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const ImageTooSmall& e) {
    err << "wetpaper: capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const ParseError& e) {
    err << "wetpaper: " << e.what() << "\n";
    return kParseOrIo;
  } catch (const IoError& e) {
    err << "wetpaper: io: " << e.what() << "\n";
    return kParseOrIo;
  } catch (const std::invalid_argument& e) {
    // Codec preconditions on the input image, e.g. fewer than 3 rows.
    err << "wetpaper: capacity: " << e.what() << "\n";
    return kCapacity;
  }
}

}  // namespace wetpaper::cli
