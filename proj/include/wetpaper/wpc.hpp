#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "wetpaper/bits.hpp"
#include "wetpaper/gf2.hpp"
#include "wetpaper/prng.hpp"

namespace wetpaper {

inline constexpr std::size_t kDefaultAreaSize = 4096;

/// Parameters shared by encoder and decoder for one area.
class AreaCodec {
 public:
  /// Throws std::invalid_argument when n < 2.
  AreaCodec(StegoKey key, std::uint64_t area_index, std::size_t n = kDefaultAreaSize);

  const StegoKey& key() const noexcept { return key_; }
  std::uint64_t area_index() const noexcept { return area_index_; }
  std::size_t n() const noexcept { return n_; }
  /// ceil(log2 n): 12 for n = 4096.
  std::size_t header_bits() const noexcept { return header_bits_; }
  /// Largest payload length the header can express.
  std::size_t max_payload() const noexcept { return (std::size_t{1} << header_bits_) - 1; }

 private:
  StegoKey key_;
  std::uint64_t area_index_;
  std::size_t n_;
  std::size_t header_bits_;
};

struct AreaEmbedResult {
  gf2::Vector modified;           // b'
  std::size_t payload_bits = 0;   // q_p
  std::size_t q_total = 0;        // header_bits + q_p
  std::size_t flips = 0;          // weight of v'
};

/// Embeds a length header plus as many leading `message` bits as the area
/// admits. `flippable` holds strictly increasing area-local indices; they
/// become the columns of H in that order. Consumes result.payload_bits bits
/// from the front of `message`.
/// Throws HeaderCapacity when fewer than header_bits restricted rows are
/// independent.
AreaEmbedResult embed_area(const gf2::Vector& cover, std::span<const std::uint32_t> flippable,
                           const AreaCodec& codec, std::span<const std::uint8_t> message);

/// Reads the header and payload as D·b'. Needs no knowledge of which pixels
/// were flippable.
Bits extract_area(const gf2::Vector& received, const AreaCodec& codec);

/// Independent-prefix length of the matrix rows restricted to `flippable`,
/// over the first |flippable| rows.
std::size_t restricted_independent_prefix(std::span<const std::uint32_t> flippable,
                                          const AreaCodec& codec);

/// Payload bits the area can carry: max(0, min(k, p) - header_bits), capped
/// at max_payload(). Throws HeaderCapacity when p < header_bits.
std::size_t area_capacity(std::span<const std::uint32_t> flippable, const AreaCodec& codec);

}  // namespace wetpaper
