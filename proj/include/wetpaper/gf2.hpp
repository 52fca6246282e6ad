#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace wetpaper::gf2 {

/// Bit-packed vector over GF(2). Bit j lives in word j/64 at position j%64.
/// Bits at positions >= size() are always zero.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

  static Vector from_bits(std::span<const std::uint8_t> bits);
  /// Adopts `words`, clearing any bits beyond `len`.
  static Vector from_words(std::size_t len, std::vector<std::uint64_t> words);

  static constexpr std::size_t word_count(std::size_t len) noexcept { return (len + 63) / 64; }

  std::size_t size() const noexcept { return len_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  /// Inner product over GF(2). Sizes must match.
  bool dot(const Vector& other) const;
  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  std::vector<std::uint8_t> to_bits() const;

  Vector& operator^=(const Vector& other);
  friend Vector operator^(Vector lhs, const Vector& rhs) { return lhs ^= rhs; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major matrix over GF(2); every row has length cols().
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Vector(cols)) {}

  /// Throws std::invalid_argument if any row length differs from `cols`.
  static Matrix from_rows(std::size_t cols, std::vector<Vector> rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const Vector& row(std::size_t r) const noexcept { return rows_[r]; }
  Vector& row(std::size_t r) noexcept { return rows_[r]; }
  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) noexcept { rows_[r].set(c, v); }

  void append_row(Vector row);
  /// The first `count` rows.
  Matrix prefix(std::size_t count) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Vector> rows_;
};

/// M·x. Throws std::invalid_argument when x.size() != M.cols().
Vector mat_vec(const Matrix& m, const Vector& x);

/// Solves H·v = rhs by Gauss-Jordan elimination with leftmost-column pivots.
/// Free variables are 0, so the result is the unique solution supported on
/// the pivot columns of the reduced row echelon form. nullopt if inconsistent.
/// Throws std::invalid_argument when rhs.size() != H.rows().
std::optional<Vector> solve(const Matrix& h, const Vector& rhs);

/// Largest p such that rows 0..p-1 are linearly independent.
std::size_t max_independent_prefix(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Incremental forward elimination. Each row holds `cols` coefficient bits
/// followed by `tags` bits that are carried through the row operations but
/// never pivoted on, e.g. right-hand sides kept symbolic. A row is kept only
/// if its coefficient part is independent of the rows already kept.
///
/// Every kept row is reduced against all earlier pivots, so the pivots are
/// distinct lowest set bits and coincide with the pivot columns of the
/// reduced row echelon form of the kept rows. Kept rows are sealed in groups
/// of kBlock; a sealed group is reduced at its own pivots and tabulated, so a
/// new row clears a whole group with one lookup.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols, std::size_t tags = 0);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Zeroed buffer of stride() words for the next row; fill, then insert_staged().
  std::span<std::uint64_t> staging();
  /// Reduces the staged row; keeps it and returns true iff it was independent.
  bool insert_staged();
  /// Copies `row` (cols + tags bits) into staging and inserts it.
  bool insert(const Vector& row);

  std::size_t pivot(std::size_t r) const noexcept { return pivots_[r]; }
  bool get(std::size_t r, std::size_t col) const noexcept {
    return (data_[r * stride_ + (col >> 6)] >> (col & 63)) & 1u;
  }

  /// The solution with zero free variables of the system whose row r is kept
  /// row r with right-hand side rhs.get(r). rhs.size() must equal rank().
  Vector back_substitute(const Vector& rhs) const;

 private:
  static constexpr std::size_t kBlock = 4;

  struct Block {
    std::size_t first_word;  // lowest pivot word; entries cover [first_word, stride)
    std::size_t table;       // offset into tables_ of the 2^kBlock entries
    std::size_t pivots[kBlock];
  };

  void seal_block();

  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> data_;  // rank() kept rows, then the staging row
  std::vector<std::size_t> pivots_;
  std::vector<Block> blocks_;
  std::vector<std::uint64_t> tables_;
};

}  // namespace wetpaper::gf2
