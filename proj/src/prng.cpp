#include "wetpaper/prng.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace wetpaper {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

StegoKey::StegoKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw std::invalid_argument("stego key must not be empty");
  digest_ = fnv1a64(bytes_);
}

StegoKey StegoKey::from_text(std::string_view text) {
  return StegoKey(std::vector<std::uint8_t>(text.begin(), text.end()));
}

StegoKey StegoKey::parse(std::string_view spec) {
  constexpr std::string_view kHexPrefix = "hex:";
  if (!spec.starts_with(kHexPrefix)) return from_text(spec);
  const std::string_view digits = spec.substr(kHexPrefix.size());
  if (digits.size() % 2 != 0) throw std::invalid_argument("hex key needs an even number of digits");
  std::vector<std::uint8_t> bytes;
  bytes.reserve(digits.size() / 2);
  for (std::size_t i = 0; i < digits.size(); i += 2) {
    const int hi = hex_value(digits[i]);
    const int lo = hex_value(digits[i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("invalid hex digit in key");
    bytes.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return StegoKey(std::move(bytes));
}

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001B3ull;
  }
  return h;
}

std::uint64_t derive_seed(const StegoKey& key, std::uint64_t tag, std::uint64_t area) noexcept {
  return splitmix64_step(key.digest() ^ tag ^ (area * kGoldenGamma));
}

std::vector<std::uint32_t> permutation(const StegoKey& key, std::size_t n_total) {
  if (n_total == 0) throw std::invalid_argument("permutation of an empty range");
  if (n_total > (std::size_t{1} << 32)) throw std::invalid_argument("permutation range exceeds 32-bit indices");
  std::vector<std::uint32_t> perm(n_total);
  std::iota(perm.begin(), perm.end(), std::uint32_t{0});
  KeyedStream stream(key, kTagPermutation, 0);
  for (std::size_t i = n_total - 1; i > 0; --i) {
    const std::size_t j = stream.next() % (i + 1);
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

MatrixRowStream::MatrixRowStream(const StegoKey& key, std::uint64_t area, std::size_t cols)
    : stream_(key, kTagMatrix, area), cols_(cols) {
  if (cols == 0) throw std::invalid_argument("matrix rows need at least one column");
}

gf2::Vector MatrixRowStream::next_row() {
  std::vector<std::uint64_t> words(gf2::Vector::word_count(cols_));
  for (auto& w : words) w = stream_.next();
  return gf2::Vector::from_words(cols_, std::move(words));
}

gf2::Matrix matrix_rows(const StegoKey& key, std::uint64_t area, std::size_t q, std::size_t n) {
  MatrixRowStream rows(key, area, n);
  gf2::Matrix m(0, n);
  for (std::size_t r = 0; r < q; ++r) m.append_row(rows.next_row());
  return m;
}

}  // namespace wetpaper
