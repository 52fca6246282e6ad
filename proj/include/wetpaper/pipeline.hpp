#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wetpaper/bitmap.hpp"
#include "wetpaper/bits.hpp"
#include "wetpaper/flippability.hpp"
#include "wetpaper/prng.hpp"

namespace wetpaper {

inline constexpr std::size_t kAreaSize = 4096;
inline constexpr std::size_t kHeaderBits = 12;

/// Shuffle and partition of an image into areas of kAreaSize permuted pixels.
struct EmbedPlan {
  std::vector<std::uint32_t> permutation;  // permuted position -> raster index
  std::size_t area_count = 0;
  FlippabilityMask mask;

  /// Raster indices of area `a`, in area-local order.
  std::span<const std::uint32_t> area(std::size_t a) const {
    return std::span<const std::uint32_t>(permutation).subspan(a * kAreaSize, kAreaSize);
  }
  std::size_t leftover_pixels() const noexcept {
    return permutation.size() - area_count * kAreaSize;
  }
};

struct AreaRecord {
  std::size_t area = 0;
  std::size_t k = 0;
  std::size_t q_p = 0;
  std::size_t flips = 0;

  friend bool operator==(const AreaRecord&, const AreaRecord&) = default;
};

/// Capacity accounting: N_A, N_FP, N_E and the per-area breakdown.
struct EmbedReport {
  std::size_t areas = 0;            // N_A
  std::size_t flippable = 0;        // N_FP, over used areas
  std::size_t embedded = 0;         // N_E = sum of q_p
  std::size_t leftover_pixels = 0;
  std::vector<AreaRecord> per_area;

  friend bool operator==(const EmbedReport&, const EmbedReport&) = default;
};

struct EmbedOutcome {
  BinaryImage image;
  EmbedReport report;
};

/// Throws ImageTooSmall below kAreaSize pixels and std::invalid_argument
/// below 3x3.
EmbedPlan plan(const BinaryImage& img, const StegoKey& key);

/// Spills `message` across areas in ascending order. Areas reached after the
/// message runs out carry zero-length headers.
/// Throws MessageTooLong, HeaderCapacity, ImageTooSmall.
EmbedOutcome embed(const BinaryImage& img, const StegoKey& key, std::span<const std::uint8_t> message);

/// Blind extraction from (image, key) only. Throws ImageTooSmall.
Bits extract(const BinaryImage& img, const StegoKey& key);

/// Per-area payload capacity; q_p in each record is the area's capacity.
/// Throws ImageTooSmall, HeaderCapacity.
EmbedReport capacity(const BinaryImage& img, const StegoKey& key);

}  // namespace wetpaper
