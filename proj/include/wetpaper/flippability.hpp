#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wetpaper/bitmap.hpp"

namespace wetpaper {

/// A 3x3 neighbourhood. Cell i (row-major, 0..8) is bit i of the pattern
/// code, so cell 4 is the center and code 16 is a lone black center.
class Window3x3 {
 public:
  static constexpr unsigned kPatterns = 512;
  static constexpr unsigned kCenter = 4;

  constexpr Window3x3() = default;
  constexpr explicit Window3x3(std::uint16_t code) : code_(code & 0x1FFu) {}

  static constexpr Window3x3 from_cells(const std::array<std::uint8_t, 9>& cells) {
    std::uint16_t code = 0;
    for (unsigned i = 0; i < 9; ++i) {
      code |= static_cast<std::uint16_t>((cells[i] & 1u) << i);
    }
    return Window3x3(code);
  }

  /// Window centred at (x, y); requires 1 <= x < width-1 and 1 <= y < height-1.
  static Window3x3 at(const BinaryImage& img, std::uint32_t x, std::uint32_t y);

  constexpr std::uint16_t code() const noexcept { return code_; }
  constexpr std::uint8_t cell(unsigned i) const noexcept { return (code_ >> i) & 1u; }
  constexpr Window3x3 with_center_flipped() const noexcept {
    return Window3x3(static_cast<std::uint16_t>(code_ ^ (1u << kCenter)));
  }

  friend constexpr bool operator==(Window3x3, Window3x3) = default;

 private:
  std::uint16_t code_ = 0;
};

/// Number of 8-connected components formed by the cells of `color` in `w`.
int count_components(Window3x3 w, std::uint8_t color) noexcept;

/// True iff the window holds both colors and complementing its center keeps
/// the 8-connected component counts of black and of white cells unchanged.
bool is_flippable(Window3x3 w) noexcept;

/// Precomputed is_flippable over all 512 pattern codes.
const std::array<bool, Window3x3::kPatterns>& flippable_table() noexcept;

/// The index set C of flippable pixels, in raster coordinates.
struct FlippabilityMask {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::vector<std::uint32_t> indices;  // strictly increasing

  std::size_t size() const noexcept { return indices.size(); }
  bool contains(std::uint32_t index) const noexcept;

  friend bool operator==(const FlippabilityMask&, const FlippabilityMask&) = default;
};

/// Slides a 3x3 window over every interior pixel of `img`. Border pixels are
/// never flippable. Throws std::invalid_argument for images below 3x3.
FlippabilityMask compute_mask(const BinaryImage& img);

/// Mask rendered as an image: flippable pixels black.
BinaryImage mask_image(const FlippabilityMask& mask);

}  // namespace wetpaper
