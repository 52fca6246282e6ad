#include "wetpaper/pipeline.hpp"

#include <string>

#include "wetpaper/errors.hpp"
#include "wetpaper/wpc.hpp"

namespace wetpaper {

namespace {

void require_one_area(const BinaryImage& img) {
  if (img.size() < kAreaSize) {
    throw ImageTooSmall("image has " + std::to_string(img.size()) + " pixels; one area needs " +
                        std::to_string(kAreaSize));
  }
}

gf2::Vector gather(const BinaryImage& img, std::span<const std::uint32_t> area) {
  gf2::Vector v(area.size());
  for (std::size_t j = 0; j < area.size(); ++j) {
    if (img[area[j]]) v.set(j, true);
  }
  return v;
}

// Area-local positions whose raster pixel is in the mask, ascending.
std::vector<std::uint32_t> local_flippable(std::span<const std::uint32_t> area,
                                           const std::vector<std::uint8_t>& in_mask) {
  std::vector<std::uint32_t> local;
  for (std::size_t j = 0; j < area.size(); ++j) {
    if (in_mask[area[j]]) local.push_back(static_cast<std::uint32_t>(j));
  }
  return local;
}

std::vector<std::uint8_t> mask_lookup(const EmbedPlan& p) {
  std::vector<std::uint8_t> in_mask(p.permutation.size(), 0);
  for (const std::uint32_t i : p.mask.indices) in_mask[i] = 1;
  return in_mask;
}

EmbedReport empty_report(const EmbedPlan& p) {
  EmbedReport report;
  report.areas = p.area_count;
  report.leftover_pixels = p.leftover_pixels();
  report.per_area.reserve(p.area_count);
  return report;
}

}  // namespace

EmbedPlan plan(const BinaryImage& img, const StegoKey& key) {
  require_one_area(img);
  EmbedPlan p;
  p.mask = compute_mask(img);
  p.permutation = permutation(key, img.size());
  p.area_count = img.size() / kAreaSize;
  return p;
}

EmbedOutcome embed(const BinaryImage& img, const StegoKey& key, std::span<const std::uint8_t> message) {
  const EmbedPlan p = plan(img, key);
  const auto in_mask = mask_lookup(p);
  EmbedOutcome outcome{img, empty_report(p)};
  std::size_t consumed = 0;

  for (std::size_t a = 0; a < p.area_count; ++a) {
    const auto area = p.area(a);
    const auto flippable = local_flippable(area, in_mask);
    const AreaCodec codec(key, a, kAreaSize);
    const AreaEmbedResult r = embed_area(gather(img, area), flippable, codec, message.subspan(consumed));
    for (std::size_t j = 0; j < area.size(); ++j) {
      outcome.image.set(area[j], r.modified.get(j));
    }
    consumed += r.payload_bits;
    outcome.report.flippable += flippable.size();
    outcome.report.embedded += r.payload_bits;
    outcome.report.per_area.push_back({a, flippable.size(), r.payload_bits, r.flips});
  }

  if (consumed < message.size()) {
    throw MessageTooLong("message has " + std::to_string(message.size()) + " bits; the image took " +
                         std::to_string(consumed));
  }
  return outcome;
}

Bits extract(const BinaryImage& img, const StegoKey& key) {
  require_one_area(img);
  const auto perm = permutation(key, img.size());
  const std::size_t areas = img.size() / kAreaSize;
  const std::span<const std::uint32_t> all(perm);
  Bits message;
  for (std::size_t a = 0; a < areas; ++a) {
    const AreaCodec codec(key, a, kAreaSize);
    const Bits part = extract_area(gather(img, all.subspan(a * kAreaSize, kAreaSize)), codec);
    message.insert(message.end(), part.begin(), part.end());
  }
  return message;
}

EmbedReport capacity(const BinaryImage& img, const StegoKey& key) {
  const EmbedPlan p = plan(img, key);
  const auto in_mask = mask_lookup(p);
  EmbedReport report = empty_report(p);
  for (std::size_t a = 0; a < p.area_count; ++a) {
    const auto flippable = local_flippable(p.area(a), in_mask);
    const std::size_t cap = area_capacity(flippable, AreaCodec(key, a, kAreaSize));
    report.flippable += flippable.size();
    report.embedded += cap;
    report.per_area.push_back({a, flippable.size(), cap, 0});
  }
  return report;
}

}  // namespace wetpaper
