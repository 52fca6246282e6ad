#include "column_selector.hpp"

#include <bit>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define WETPAPER_HAVE_PEXT_DISPATCH 1
#endif

namespace wetpaper::detail {

namespace {

template <typename Compress>
void gather_with(std::span<const std::uint64_t> row, std::span<std::uint64_t> out, std::uint32_t word,
                 std::uint32_t offset, std::uint64_t mask, Compress compress) {
  const std::uint64_t bits = compress(row[word], mask);
  const unsigned shift = offset & 63;
  out[offset >> 6] |= bits << shift;
  if (shift != 0 && shift + static_cast<unsigned>(std::popcount(mask)) > 64) {
    out[(offset >> 6) + 1] |= bits >> (64 - shift);
  }
}

#ifdef WETPAPER_HAVE_PEXT_DISPATCH
__attribute__((target("bmi2"))) std::uint64_t pext(std::uint64_t x, std::uint64_t mask) {
  return _pext_u64(x, mask);
}

bool cpu_has_bmi2() {
  static const bool has = __builtin_cpu_supports("bmi2");
  return has;
}
#endif

}  // namespace

std::uint64_t compress_bits(std::uint64_t x, std::uint64_t mask) noexcept {
  std::uint64_t out = 0;
  for (std::uint64_t bit = 1; mask != 0; mask &= mask - 1, bit <<= 1) {
    if (x & mask & (~mask + 1)) out |= bit;
  }
  return out;
}

ColumnSelector::ColumnSelector(std::span<const std::uint32_t> columns, Path path) : size_(columns.size()) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const std::uint32_t word = columns[i] >> 6;
    if (chunks_.empty() || chunks_.back().word != word) {
      chunks_.push_back({word, static_cast<std::uint32_t>(i), 0});
    }
    chunks_.back().mask |= std::uint64_t{1} << (columns[i] & 63);
  }
#ifdef WETPAPER_HAVE_PEXT_DISPATCH
  hardware_ = path == Path::Auto && cpu_has_bmi2();
#else
  (void)path;
#endif
}

void ColumnSelector::gather(std::span<const std::uint64_t> row, std::span<std::uint64_t> out) const noexcept {
#ifdef WETPAPER_HAVE_PEXT_DISPATCH
  if (hardware_) {
    for (const Chunk& c : chunks_) gather_with(row, out, c.word, c.offset, c.mask, pext);
    return;
  }
#endif
  for (const Chunk& c : chunks_) gather_with(row, out, c.word, c.offset, c.mask, compress_bits);
}

}  // namespace wetpaper::detail
