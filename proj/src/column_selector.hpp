#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wetpaper::detail {

/// Portable parallel bit extract: the bits of x selected by mask, packed
/// towards bit 0 in order.
std::uint64_t compress_bits(std::uint64_t x, std::uint64_t mask) noexcept;

/// Gathers the bits of wide rows at a fixed, strictly increasing column set
/// into dense rows. Columns sharing a source word are adjacent in the
/// output, so each source word compresses to one contiguous run.
class ColumnSelector {
 public:
  enum class Path { Auto, Portable };

  explicit ColumnSelector(std::span<const std::uint32_t> columns, Path path = Path::Auto);

  std::size_t size() const noexcept { return size_; }
  /// ORs the selected bits of `row` into `out`, which must be zeroed and
  /// hold at least ceil(size()/64) words.
  void gather(std::span<const std::uint64_t> row, std::span<std::uint64_t> out) const noexcept;

 private:
  struct Chunk {
    std::uint32_t word;
    std::uint32_t offset;
    std::uint64_t mask;
  };

  std::vector<Chunk> chunks_;
  std::size_t size_ = 0;
  bool hardware_ = false;
};

}  // namespace wetpaper::detail
