#include <doctest.h>

#include <stdexcept>

#include "support/oracles.hpp"
#include "support/synth.hpp"
#include "wetpaper/flippability.hpp"

using namespace wetpaper;
using wetpaper::testing::oracle_flippable;

TEST_CASE("uniform windows are never flippable") {
  CHECK_FALSE(is_flippable(Window3x3(0)));
  CHECK_FALSE(is_flippable(Window3x3(0x1FF)));
}

TEST_CASE("isolated black center is not flippable") {
  const Window3x3 w = Window3x3::from_cells({0, 0, 0, 0, 1, 0, 0, 0, 0});
  CHECK(w.code() == 16);
  CHECK(count_components(w, 1) == 1);
  CHECK(count_components(w.with_center_flipped(), 1) == 0);
  CHECK_FALSE(is_flippable(w));
}

TEST_CASE("flipping the middle of a vertical stroke would split it") {
  const Window3x3 w = Window3x3::from_cells({0, 1, 0, 0, 1, 0, 0, 1, 0});
  CHECK(count_components(w.with_center_flipped(), 1) == 2);
  CHECK_FALSE(is_flippable(w));
}

TEST_CASE("edge and corner patterns follow the component oracle") {
  // Top row black, center white: the flip grows the edge by one pixel.
  const Window3x3 edge = Window3x3::from_cells({1, 1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(is_flippable(edge) == oracle_flippable(edge.code()));
  CHECK(is_flippable(edge));
  // Black L-shaped corner with a white interior.
  const Window3x3 corner = Window3x3::from_cells({1, 1, 1, 1, 0, 0, 1, 0, 0});
  CHECK(is_flippable(corner) == oracle_flippable(corner.code()));
  // A white hole in a black field disappears when flipped.
  const Window3x3 hole = Window3x3(static_cast<std::uint16_t>(0x1FF ^ 16));
  CHECK_FALSE(is_flippable(hole));
}

TEST_CASE("table agrees with a flood-fill oracle on all 512 patterns") {
  const auto& table = flippable_table();
  int flippable = 0;
  for (unsigned code = 0; code < Window3x3::kPatterns; ++code) {
    INFO("pattern " << code);
    CHECK(table[code] == oracle_flippable(code));
    CHECK(is_flippable(Window3x3(static_cast<std::uint16_t>(code))) == table[code]);
    for (std::uint8_t color = 0; color < 2; ++color) {
      CHECK(count_components(Window3x3(static_cast<std::uint16_t>(code)), color) ==
            wetpaper::testing::flood_fill_components(wetpaper::testing::cells_of(code), color));
    }
    flippable += table[code];
  }
  CHECK(flippable == 112);
}

TEST_CASE("flippability is closed under the dihedral group and color inversion") {
  for (unsigned code = 0; code < Window3x3::kPatterns; ++code) {
    const bool f = is_flippable(Window3x3(static_cast<std::uint16_t>(code)));
    for (int t = 0; t < 8; ++t) {
      CHECK(is_flippable(Window3x3(static_cast<std::uint16_t>(wetpaper::testing::dihedral(code, t)))) == f);
    }
    CHECK(is_flippable(Window3x3(static_cast<std::uint16_t>(code ^ 0x1FF))) == f);
  }
}

TEST_CASE("compute_mask on small images") {
  SUBCASE("all white") { CHECK(compute_mask(BinaryImage(20, 9)).indices.empty()); }
  SUBCASE("3x3 can only contain its center") {
    const BinaryImage img(3, 3, {1, 1, 1, 0, 0, 0, 0, 0, 0});
    const auto mask = compute_mask(img);
    REQUIRE(mask.size() == 1);
    CHECK(mask.indices[0] == 4);
  }
  SUBCASE("5x5 with a horizontal segment matches per-pixel oracle") {
    BinaryImage img(5, 5);
    for (std::uint32_t x = 1; x <= 3; ++x) img.set(2 * 5 + x, 1);
    const auto mask = compute_mask(img);
    std::vector<std::uint32_t> expected;
    for (std::uint32_t y = 1; y < 4; ++y) {
      for (std::uint32_t x = 1; x < 4; ++x) {
        if (oracle_flippable(Window3x3::at(img, x, y).code())) expected.push_back(y * 5 + x);
      }
    }
    CHECK(mask.indices == expected);
    // Everything interior except the segment's middle pixel.
    CHECK(mask.indices == std::vector<std::uint32_t>{6, 7, 8, 11, 13, 16, 17, 18});
  }
  SUBCASE("too small") {
    CHECK_THROWS_AS(compute_mask(BinaryImage(2, 5)), std::invalid_argument);
    CHECK_THROWS_AS(compute_mask(BinaryImage(5, 2)), std::invalid_argument);
  }
}

TEST_CASE("compute_mask properties on random images") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const BinaryImage img = seed % 2 ? wetpaper::testing::text_like_image(97, 61, seed)
                                     : wetpaper::testing::random_noise_image(40, 33, seed, 0.4);
    const auto mask = compute_mask(img);
    CHECK(mask == compute_mask(img));
    for (std::size_t i = 0; i < mask.size(); ++i) {
      const std::uint32_t idx = mask.indices[i];
      const std::uint32_t x = idx % img.width(), y = idx / img.width();
      CHECK(x > 0);
      CHECK(y > 0);
      CHECK(x + 1 < img.width());
      CHECK(y + 1 < img.height());
      if (i > 0) CHECK(mask.indices[i - 1] < idx);
      // The window around a flipped pixel keeps both component counts.
      const BinaryImage flipped = flip_pixel(img, idx);
      const Window3x3 before = Window3x3::at(img, x, y), after = Window3x3::at(flipped, x, y);
      CHECK(count_components(before, 0) == count_components(after, 0));
      CHECK(count_components(before, 1) == count_components(after, 1));
    }
    const BinaryImage rendered = mask_image(mask);
    CHECK(rendered.black_count() == mask.size());
    for (const auto idx : mask.indices) CHECK(mask.contains(idx));
  }
}
