#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace wetpaper {

enum class PbmFormat { P1, P4 };

/// A 1-bit image in raster order. Pixel value 1 is black, 0 is white.
class BinaryImage {
 public:
  static constexpr std::uint32_t kMaxSide = 1u << 16;

  /// All-white image. Throws std::invalid_argument on zero or oversized sides.
  BinaryImage(std::uint32_t width, std::uint32_t height);

  /// `bits` must hold exactly width*height values, each 0 or 1.
  BinaryImage(std::uint32_t width, std::uint32_t height, std::vector<std::uint8_t> bits);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return bits_.size(); }

  std::uint8_t operator[](std::size_t index) const noexcept { return bits_[index]; }
  std::uint8_t at(std::uint32_t x, std::uint32_t y) const noexcept {
    return bits_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  void set(std::size_t index, std::uint8_t value);

  std::size_t black_count() const noexcept;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<std::uint8_t> bits_;
};

/// Returns a copy of `img` with the pixel at `index` complemented.
/// Throws std::out_of_range when index >= width*height.
BinaryImage flip_pixel(const BinaryImage& img, std::size_t index);

/// Parses a P1 (ASCII) or P4 (packed) PBM stream. Throws ParseError.
BinaryImage parse_pbm(std::span<const std::uint8_t> data);
BinaryImage parse_pbm(std::string_view data);

/// Reads only the magic number. Throws ParseError(BadMagic).
PbmFormat pbm_format(std::span<const std::uint8_t> data);

std::vector<std::uint8_t> serialize_pbm(const BinaryImage& img, PbmFormat format);

}  // namespace wetpaper
