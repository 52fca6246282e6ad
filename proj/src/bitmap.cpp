#include "wetpaper/bitmap.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "wetpaper/errors.hpp"

namespace wetpaper {

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::BadMagic:
      return "unsupported magic";
    case ParseErrorKind::BadDimensions:
      return "bad dimensions";
    case ParseErrorKind::Truncated:
      return "truncated";
    case ParseErrorKind::BadSample:
      return "bad sample";
  }
  return "unknown";
}

namespace {

void check_dimensions(std::uint32_t width, std::uint32_t height) {
  if (width == 0 || height == 0 || width > BinaryImage::kMaxSide || height > BinaryImage::kMaxSide) {
    throw std::invalid_argument("image dimensions must be in 1.." +
                                std::to_string(BinaryImage::kMaxSide));
  }
}

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  bool done() const { return pos_ >= data_.size(); }
  std::uint8_t peek() const { return data_[pos_]; }
  std::uint8_t get() { return data_[pos_++]; }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }
  std::span<const std::uint8_t> rest() const { return data_.subspan(pos_); }

  void skip_space_and_comments() {
    while (!done()) {
      if (is_space(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!done() && peek() != '\n' && peek() != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint32_t dimension(const char* name) {
    skip_space_and_comments();
    if (done()) throw ParseError(ParseErrorKind::Truncated, std::string("missing ") + name);
    const std::size_t start = pos_;
    while (!done() && peek() >= '0' && peek() <= '9') ++pos_;
    if (pos_ == start || (!done() && !is_space(peek()) && peek() != '#')) {
      throw ParseError(ParseErrorKind::BadDimensions, std::string("malformed ") + name);
    }
    if (pos_ - start > 6) throw ParseError(ParseErrorKind::BadDimensions, std::string(name) + " too large");
    std::uint32_t value = 0;
    const auto* first = reinterpret_cast<const char*>(data_.data() + start);
    std::from_chars(first, first + (pos_ - start), value);
    if (value == 0 || value > BinaryImage::kMaxSide) {
      throw ParseError(ParseErrorKind::BadDimensions, std::string(name) + " out of range");
    }
    return value;
  }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

std::vector<std::uint8_t> read_p1_payload(Reader& in, std::size_t count) {
  std::vector<std::uint8_t> bits;
  bits.reserve(count);
  in.skip_space_and_comments();
  while (bits.size() < count) {
    if (in.done()) throw ParseError(ParseErrorKind::Truncated, "P1 payload ends early");
    const std::uint8_t c = in.get();
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!is_space(c)) {
      throw ParseError(ParseErrorKind::BadSample, "unexpected byte in P1 payload at offset " +
                                                      std::to_string(in.pos() - 1));
    }
  }
  return bits;
}

std::vector<std::uint8_t> read_p4_payload(Reader& in, std::uint32_t width, std::uint32_t height) {
  if (in.done() || !is_space(in.get())) {
    throw ParseError(ParseErrorKind::Truncated, "missing whitespace before P4 raster");
  }
  const std::size_t row_bytes = (width + 7) / 8;
  if (in.remaining() < row_bytes * height) {
    throw ParseError(ParseErrorKind::Truncated, "P4 raster holds " + std::to_string(in.remaining()) +
                                                    " bytes, need " + std::to_string(row_bytes * height));
  }
  const auto raster = in.rest();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(width) * height);
  for (std::uint32_t y = 0; y < height; ++y) {
    const auto row = raster.subspan(y * row_bytes, row_bytes);
    for (std::uint32_t x = 0; x < width; ++x) {
      bits[static_cast<std::size_t>(y) * width + x] = (row[x >> 3] >> (7 - (x & 7))) & 1u;
    }
  }
  return bits;
}

void append(std::vector<std::uint8_t>& out, std::string_view s) { out.insert(out.end(), s.begin(), s.end()); }

}  // namespace

BinaryImage::BinaryImage(std::uint32_t width, std::uint32_t height) : width_(width), height_(height) {
  check_dimensions(width, height);
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

BinaryImage::BinaryImage(std::uint32_t width, std::uint32_t height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  check_dimensions(width, height);
  if (bits_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("bit count does not match width*height");
  }
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw std::invalid_argument("pixel values must be 0 or 1");
  }
}

void BinaryImage::set(std::size_t index, std::uint8_t value) {
  if (index >= bits_.size()) throw std::out_of_range("pixel index out of range");
  bits_[index] = value & 1u;
}

std::size_t BinaryImage::black_count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BinaryImage flip_pixel(const BinaryImage& img, std::size_t index) {
  if (index >= img.size()) {
    throw std::out_of_range("pixel index " + std::to_string(index) + " out of range");
  }
  BinaryImage out = img;
  out.set(index, img[index] ^ 1u);
  return out;
}

PbmFormat pbm_format(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P') throw ParseError(ParseErrorKind::BadMagic, "not a PBM stream");
  if (data[1] == '1') return PbmFormat::P1;
  if (data[1] == '4') return PbmFormat::P4;
  throw ParseError(ParseErrorKind::BadMagic, std::string("P") + static_cast<char>(data[1]));
}

BinaryImage parse_pbm(std::span<const std::uint8_t> data) {
  const PbmFormat format = pbm_format(data);
  Reader in(data.subspan(2));
  if (!in.done() && !is_space(in.peek()) && in.peek() != '#') {
    throw ParseError(ParseErrorKind::BadMagic, "magic not followed by whitespace");
  }
  const std::uint32_t width = in.dimension("width");
  const std::uint32_t height = in.dimension("height");
  auto bits = format == PbmFormat::P1 ? read_p1_payload(in, static_cast<std::size_t>(width) * height)
                                      : read_p4_payload(in, width, height);
  return BinaryImage(width, height, std::move(bits));
}

BinaryImage parse_pbm(std::string_view data) {
  return parse_pbm(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

std::vector<std::uint8_t> serialize_pbm(const BinaryImage& img, PbmFormat format) {
  std::vector<std::uint8_t> out;
  const std::string dims = std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n";
  if (format == PbmFormat::P1) {
    append(out, "P1\n");
    append(out, dims);
    out.reserve(out.size() + img.size() * 2 + img.height());
    // Keep lines within 70 characters.
    for (std::uint32_t y = 0; y < img.height(); ++y) {
      for (std::uint32_t x = 0; x < img.width(); ++x) {
        out.push_back(static_cast<std::uint8_t>('0' + img.at(x, y)));
        const bool line_end = x + 1 == img.width() || (x + 1) % 35 == 0;
        out.push_back(line_end ? '\n' : ' ');
      }
    }
    return out;
  }
  append(out, "P4\n");
  append(out, dims);
  const std::size_t row_bytes = (img.width() + 7) / 8;
  const std::size_t header = out.size();
  out.resize(header + row_bytes * img.height(), 0);
  for (std::uint32_t y = 0; y < img.height(); ++y) {
    std::uint8_t* row = out.data() + header + y * row_bytes;
    for (std::uint32_t x = 0; x < img.width(); ++x) {
      if (img.at(x, y)) row[x >> 3] |= static_cast<std::uint8_t>(0x80u >> (x & 7));
    }
  }
  return out;
}

}  // namespace wetpaper
