#include "wetpaper/wpc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include "column_selector.hpp"
#include "wetpaper/errors.hpp"

namespace wetpaper {

namespace {

void check_flippable(std::span<const std::uint32_t> flippable, std::size_t n) {
  for (std::size_t i = 0; i < flippable.size(); ++i) {
    if (flippable[i] >= n) throw std::invalid_argument("flippable index outside the area");
    if (i > 0 && flippable[i] <= flippable[i - 1]) {
      throw std::invalid_argument("flippable indices must be strictly increasing");
    }
  }
}

void set_bit(std::span<std::uint64_t> words, std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }

}  // namespace

AreaCodec::AreaCodec(StegoKey key, std::uint64_t area_index, std::size_t n)
    : key_(std::move(key)), area_index_(area_index), n_(n) {
  if (n < 2) throw std::invalid_argument("area size must be at least 2");
  header_bits_ = static_cast<std::size_t>(std::bit_width(n - 1));
}

AreaEmbedResult embed_area(const gf2::Vector& cover, std::span<const std::uint32_t> flippable,
                           const AreaCodec& codec, std::span<const std::uint8_t> message) {
  const std::size_t n = codec.n();
  const std::size_t header = codec.header_bits();
  if (cover.size() != n) {
    throw std::invalid_argument("cover holds " + std::to_string(cover.size()) + " bits, area size is " +
                                std::to_string(n));
  }
  check_flippable(flippable, n);

  const std::size_t k = flippable.size();
  const std::size_t desired = std::min({message.size(), k > header ? k - header : std::size_t{0},
                                        codec.max_payload()});

  // Each kept row of H carries tags: column k holds (D_i . cover) xor the
  // payload bit of row i, column k+1+i marks header row i. The header value
  // depends on how many rows turn out independent, so it is applied after
  // elimination by combining the tags.
  MatrixRowStream stream(codec.key(), codec.area_index(), n);
  const detail::ColumnSelector select(flippable);
  gf2::EchelonBasis basis(k, 1 + header);
  for (std::size_t r = 0; r < header + desired; ++r) {
    const gf2::Vector row = stream.next_row();
    auto staged = basis.staging();
    select.gather(row.words(), staged);
    const bool payload_bit = r >= header && (message[r - header] & 1u);
    if (row.dot(cover) != payload_bit) set_bit(staged, k);
    if (r < header) set_bit(staged, k + 1 + r);
    if (!basis.insert_staged()) break;
  }
  const std::size_t independent = basis.rank();
  if (independent < header) {
    throw HeaderCapacity("area " + std::to_string(codec.area_index()) + " has only " +
                         std::to_string(independent) + " independent rows over " + std::to_string(k) +
                         " flippable pixels; the header needs " + std::to_string(header));
  }

  // Either all header + desired rows were kept, or the first dependent row
  // capped q at the independent prefix; both leave q == rank.
  const std::size_t q_p = std::min(desired, independent - header);
  const std::size_t q = header + q_p;
  if (q != independent) throw std::logic_error("row count and independent prefix disagree");

  gf2::Vector rhs(q);
  for (std::size_t r = 0; r < q; ++r) {
    bool bit = basis.get(r, k);
    for (std::size_t i = 0; i < header; ++i) {
      if (basis.get(r, k + 1 + i) && ((q_p >> (header - 1 - i)) & 1u)) bit = !bit;
    }
    rhs.set(r, bit);
  }
  const gf2::Vector v = basis.back_substitute(rhs);

  AreaEmbedResult result;
  result.modified = cover;
  for (std::size_t i = 0; i < k; ++i) {
    if (v.get(i)) result.modified.flip(flippable[i]);
  }
  result.payload_bits = q_p;
  result.q_total = q;
  result.flips = v.weight();
  return result;
}

Bits extract_area(const gf2::Vector& received, const AreaCodec& codec) {
  if (received.size() != codec.n()) {
    throw std::invalid_argument("received vector holds " + std::to_string(received.size()) +
                                " bits, area size is " + std::to_string(codec.n()));
  }
  MatrixRowStream stream(codec.key(), codec.area_index(), codec.n());
  std::size_t q_p = 0;
  for (std::size_t i = 0; i < codec.header_bits(); ++i) {
    q_p = (q_p << 1) | static_cast<std::size_t>(stream.next_row().dot(received));
  }
  Bits payload(q_p);
  for (auto& bit : payload) bit = stream.next_row().dot(received);
  return payload;
}

std::size_t restricted_independent_prefix(std::span<const std::uint32_t> flippable, const AreaCodec& codec) {
  check_flippable(flippable, codec.n());
  MatrixRowStream stream(codec.key(), codec.area_index(), codec.n());
  const detail::ColumnSelector select(flippable);
  gf2::EchelonBasis basis(flippable.size());
  while (basis.rank() < flippable.size()) {
    const gf2::Vector row = stream.next_row();
    select.gather(row.words(), basis.staging());
    if (!basis.insert_staged()) break;
  }
  return basis.rank();
}

std::size_t area_capacity(std::span<const std::uint32_t> flippable, const AreaCodec& codec) {
  const std::size_t p = restricted_independent_prefix(flippable, codec);
  const std::size_t header = codec.header_bits();
  if (p < header) {
    throw HeaderCapacity("area " + std::to_string(codec.area_index()) + " has only " + std::to_string(p) +
                         " independent rows; the header needs " + std::to_string(header));
  }
  return std::min(std::min(flippable.size(), p) - header, codec.max_payload());
}

}  // namespace wetpaper
