#include "wetpaper/flippability.hpp"

#include <algorithm>
#include <stdexcept>

namespace wetpaper {

namespace {

// Union-find over the 9 cells; two same-colored cells join when their rows
// and columns each differ by at most one.
constexpr int components_of(std::uint16_t code, std::uint8_t color) {
  std::array<int, 9> parent{};
  for (int i = 0; i < 9; ++i) parent[i] = i;
  auto find = [&parent](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto same = [code, color](int i) { return ((code >> i) & 1u) == color; };

  for (int a = 0; a < 9; ++a) {
    if (!same(a)) continue;
    for (int b = a + 1; b < 9; ++b) {
      if (!same(b)) continue;
      const int dr = a / 3 - b / 3;
      const int dc = a % 3 - b % 3;
      if (dr >= -1 && dr <= 1 && dc >= -1 && dc <= 1) parent[find(a)] = find(b);
    }
  }
  int roots = 0;
  for (int i = 0; i < 9; ++i) {
    if (same(i) && find(i) == i) ++roots;
  }
  return roots;
}

constexpr bool classify(std::uint16_t code) {
  if (code == 0 || code == 0x1FF) return false;
  const auto flipped = static_cast<std::uint16_t>(code ^ (1u << Window3x3::kCenter));
  return components_of(code, 1) == components_of(flipped, 1) &&
         components_of(code, 0) == components_of(flipped, 0);
}

constexpr std::array<bool, Window3x3::kPatterns> build_table() {
  std::array<bool, Window3x3::kPatterns> table{};
  for (unsigned code = 0; code < Window3x3::kPatterns; ++code) {
    table[code] = classify(static_cast<std::uint16_t>(code));
  }
  return table;
}

constexpr auto kTable = build_table();

}  // namespace

Window3x3 Window3x3::at(const BinaryImage& img, std::uint32_t x, std::uint32_t y) {
  std::uint16_t code = 0;
  unsigned cell = 0;
  for (std::uint32_t dy = 0; dy < 3; ++dy) {
    for (std::uint32_t dx = 0; dx < 3; ++dx, ++cell) {
      code |= static_cast<std::uint16_t>(img.at(x + dx - 1, y + dy - 1) << cell);
    }
  }
  return Window3x3(code);
}

int count_components(Window3x3 w, std::uint8_t color) noexcept { return components_of(w.code(), color & 1u); }

bool is_flippable(Window3x3 w) noexcept { return kTable[w.code()]; }

const std::array<bool, Window3x3::kPatterns>& flippable_table() noexcept { return kTable; }

bool FlippabilityMask::contains(std::uint32_t index) const noexcept {
  return std::binary_search(indices.begin(), indices.end(), index);
}

FlippabilityMask compute_mask(const BinaryImage& img) {
  if (img.width() < 3 || img.height() < 3) {
    throw std::invalid_argument("flippability needs an image of at least 3x3 pixels");
  }
  FlippabilityMask mask;
  mask.width = img.width();
  mask.height = img.height();
  const std::uint32_t w = img.width();
  const auto bits = img.bits();
  for (std::uint32_t y = 1; y + 1 < img.height(); ++y) {
    const std::uint8_t* up = bits.data() + static_cast<std::size_t>(y - 1) * w;
    const std::uint8_t* mid = up + w;
    const std::uint8_t* down = mid + w;
    for (std::uint32_t x = 1; x + 1 < w; ++x) {
      const auto code = static_cast<std::uint16_t>(
          up[x - 1] | up[x] << 1 | up[x + 1] << 2 | mid[x - 1] << 3 | mid[x] << 4 | mid[x + 1] << 5 |
          down[x - 1] << 6 | down[x] << 7 | down[x + 1] << 8);
      if (kTable[code]) mask.indices.push_back(y * w + x);
    }
  }
  return mask;
}

BinaryImage mask_image(const FlippabilityMask& mask) {
  BinaryImage out(mask.width, mask.height);
  for (const std::uint32_t i : mask.indices) out.set(i, 1);
  return out;
}

}  // namespace wetpaper
