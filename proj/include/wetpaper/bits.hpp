#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wetpaper {

/// Message bit sequence, one 0/1 value per element.
using Bits = std::vector<std::uint8_t>;

/// MSB-first unpacking: byte 0x80 becomes 1,0,0,0,0,0,0,0.
Bits unpack_bytes(std::span<const std::uint8_t> bytes);

/// MSB-first packing; a partial final byte is zero-padded.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);

}  // namespace wetpaper
