#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wetpaper/gf2.hpp"

namespace wetpaper {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kTagPermutation = 0x5045524D5045524Dull;  // "PERMPERM"
inline constexpr std::uint64_t kTagMatrix = 0x4D4154524D415452ull;       // "MATRMATR"

/// Shared secret. Never empty.
class StegoKey {
 public:
  /// Throws std::invalid_argument on an empty byte sequence.
  explicit StegoKey(std::vector<std::uint8_t> bytes);

  static StegoKey from_text(std::string_view text);
  /// Accepts "hex:<digits>" or plain UTF-8 text. Throws std::invalid_argument
  /// on malformed hex or an empty result.
  static StegoKey parse(std::string_view spec);

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::uint64_t digest() const noexcept { return digest_; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t digest_;
};

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept;

/// One SplitMix64 output step applied to `state`: the output a SplitMix64
/// generator whose current state is `state` would emit next.
constexpr std::uint64_t splitmix64_step(std::uint64_t state) noexcept {
  std::uint64_t z = state + kGoldenGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(const StegoKey& key, std::uint64_t tag, std::uint64_t area) noexcept;

/// SplitMix64 word stream seeded from (key, tag, area).
class KeyedStream {
 public:
  explicit KeyedStream(std::uint64_t seed) noexcept : state_(seed) {}
  KeyedStream(const StegoKey& key, std::uint64_t tag, std::uint64_t area) noexcept
      : state_(derive_seed(key, tag, area)), digest_(key.digest()), tag_(tag), area_(area) {}

  std::uint64_t next() noexcept {
    const std::uint64_t out = splitmix64_step(state_);
    state_ += kGoldenGamma;
    return out;
  }

  std::uint64_t state() const noexcept { return state_; }
  std::uint64_t key_digest() const noexcept { return digest_; }
  std::uint64_t tag() const noexcept { return tag_; }
  std::uint64_t area() const noexcept { return area_; }

 private:
  std::uint64_t state_;
  std::uint64_t digest_ = 0;
  std::uint64_t tag_ = 0;
  std::uint64_t area_ = 0;
};

/// Keyed Fisher-Yates shuffle of 0..n_total-1. Throws on n_total == 0.
std::vector<std::uint32_t> permutation(const StegoKey& key, std::size_t n_total);

/// Emits the rows of an area's pseudo-random matrix one at a time. Each row
/// consumes ceil(cols/64) words; any prefix of rows is independent of how
/// many rows are eventually drawn.
class MatrixRowStream {
 public:
  MatrixRowStream(const StegoKey& key, std::uint64_t area, std::size_t cols);

  std::size_t cols() const noexcept { return cols_; }
  gf2::Vector next_row();

 private:
  KeyedStream stream_;
  std::size_t cols_;
};

/// First q rows of the area's matrix, n columns each.
gf2::Matrix matrix_rows(const StegoKey& key, std::uint64_t area, std::size_t q, std::size_t n);

}  // namespace wetpaper
