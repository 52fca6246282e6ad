#include "wetpaper/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace wetpaper::gf2 {

namespace {

void mask_tail(std::size_t len, std::span<std::uint64_t> words) {
  if (len % 64 != 0 && !words.empty()) words.back() &= (std::uint64_t{1} << (len % 64)) - 1;
}

// Dense row-major word buffer used by the eliminations.
class WordRows {
 public:
  WordRows(std::size_t rows, std::size_t bits) : stride_(Vector::word_count(bits)), data_(rows * stride_, 0) {}

  std::uint64_t* row(std::size_t r) { return data_.data() + r * stride_; }
  bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c) { data_[r * stride_ + (c >> 6)] |= std::uint64_t{1} << (c & 63); }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t w = 0; w < stride_; ++w) std::swap(data_[a * stride_ + w], data_[b * stride_ + w]);
  }
  // row(dst) ^= row(src) for words from `first_word` on.
  void xor_into(std::size_t dst, std::size_t src, std::size_t first_word) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = first_word; w < stride_; ++w) d[w] ^= s[w];
  }

 private:
  std::size_t stride_;
  std::vector<std::uint64_t> data_;
};

}  // namespace

Vector Vector::from_bits(std::span<const std::uint8_t> bits) {
  Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1u) v.set(i, true);
  }
  return v;
}

Vector Vector::from_words(std::size_t len, std::vector<std::uint64_t> words) {
  if (words.size() != word_count(len)) throw std::invalid_argument("word count does not match bit length");
  Vector v;
  v.len_ = len;
  v.words_ = std::move(words);
  mask_tail(len, v.words_);
  return v;
}

bool Vector::dot(const Vector& other) const {
  if (other.len_ != len_) throw std::invalid_argument("dot product of vectors with different lengths");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t Vector::weight() const noexcept {
  std::size_t n = 0;
  for (const std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Vector::is_zero() const noexcept {
  for (const std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::uint8_t> Vector::to_bits() const {
  std::vector<std::uint8_t> bits(len_);
  for (std::size_t i = 0; i < len_; ++i) bits[i] = get(i);
  return bits;
}

Vector& Vector::operator^=(const Vector& other) {
  if (other.len_ != len_) throw std::invalid_argument("xor of vectors with different lengths");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<Vector> rows) {
  Matrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void Matrix::append_row(Vector row) {
  if (row.size() != cols_) {
    throw std::invalid_argument("row of length " + std::to_string(row.size()) + " in matrix with " +
                                std::to_string(cols_) + " columns");
  }
  rows_.push_back(std::move(row));
}

Matrix Matrix::prefix(std::size_t count) const {
  if (count > rows()) throw std::out_of_range("prefix longer than matrix");
  Matrix m(0, cols_);
  m.rows_.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(count));
  return m;
}

Vector mat_vec(const Matrix& m, const Vector& x) {
  if (x.size() != m.cols()) {
    throw std::invalid_argument("mat_vec: vector length " + std::to_string(x.size()) + " != matrix columns " +
                                std::to_string(m.cols()));
  }
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).dot(x)) out.set(r, true);
  }
  return out;
}

std::optional<Vector> solve(const Matrix& h, const Vector& rhs) {
  if (rhs.size() != h.rows()) {
    throw std::invalid_argument("solve: rhs length " + std::to_string(rhs.size()) + " != matrix rows " +
                                std::to_string(h.rows()));
  }
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  // Augmented [H | rhs], rhs in column `cols`.
  WordRows a(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto src = h.row(r).words();
    std::copy(src.begin(), src.end(), a.row(r));
    if (rhs.get(r)) a.set(r, cols);
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && !a.get(p, c)) ++p;
    if (p == rows) continue;
    a.swap_rows(p, lead);
    const std::size_t first_word = c >> 6;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != lead && a.get(r, c)) a.xor_into(r, lead, first_word);
    }
    pivot_cols.push_back(c);
    ++lead;
  }
  // Rows at and below `lead` have an all-zero H part.
  for (std::size_t r = lead; r < rows; ++r) {
    if (a.get(r, cols)) return std::nullopt;
  }
  Vector v(cols);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    if (a.get(r, cols)) v.set(pivot_cols[r], true);
  }
  return v;
}

EchelonBasis::EchelonBasis(std::size_t cols, std::size_t tags)
    : cols_(cols), stride_(std::max<std::size_t>(1, Vector::word_count(cols + tags))) {}

std::span<std::uint64_t> EchelonBasis::staging() {
  const std::size_t begin = rank() * stride_;
  data_.resize(begin + stride_);
  std::fill(data_.begin() + static_cast<std::ptrdiff_t>(begin), data_.end(), 0);
  return {data_.data() + begin, stride_};
}

bool EchelonBasis::insert_staged() {
  const std::size_t r = rank();
  const std::size_t stride = stride_;
  if (data_.size() != (r + 1) * stride) throw std::logic_error("insert_staged without staging");
  std::uint64_t* const base = data_.data();
  std::uint64_t* const x = base + r * stride;
  const std::uint64_t* const tables = tables_.data();
  for (const Block& blk : blocks_) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < kBlock; ++j) {
      const std::size_t c = blk.pivots[j];
      index |= static_cast<std::size_t>((x[c >> 6] >> (c & 63)) & 1u) << j;
    }
    const std::size_t len = stride - blk.first_word;
    const std::uint64_t* const e = tables + blk.table + index * len;
    std::uint64_t* const y = x + blk.first_word;
    for (std::size_t w = 0; w < len; ++w) y[w] ^= e[w];
  }
  const std::size_t* const pivots = pivots_.data();
  for (std::size_t i = blocks_.size() * kBlock; i < r; ++i) {
    const std::size_t c = pivots[i];
    if ((x[c >> 6] >> (c & 63)) & 1u) {
      // Row i is zero below its pivot's word.
      const std::uint64_t* const b = base + i * stride;
      for (std::size_t w = c >> 6; w < stride; ++w) x[w] ^= b[w];
    }
  }
  const std::size_t full_words = cols_ / 64;
  for (std::size_t w = 0; w <= full_words && w < stride; ++w) {
    std::uint64_t bits = x[w];
    if (w == full_words) bits &= (std::uint64_t{1} << (cols_ % 64)) - 1;
    if (bits != 0) {
      pivots_.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      if (rank() % kBlock == 0) seal_block();
      return true;
    }
  }
  data_.resize(r * stride);
  return false;
}

void EchelonBasis::seal_block() {
  const std::size_t stride = stride_;
  const std::size_t first = rank() - kBlock;
  Block blk{};
  blk.first_word = stride;
  for (std::size_t j = 0; j < kBlock; ++j) {
    blk.pivots[j] = pivots_[first + j];
    blk.first_word = std::min(blk.first_word, blk.pivots[j] >> 6);
  }
  // Later rows of the group are already zero at earlier pivots; clear the
  // earlier rows at later pivots. Each row stays zero below its pivot.
  std::uint64_t* const rows = data_.data() + first * stride;
  for (std::size_t j = 1; j < kBlock; ++j) {
    const std::size_t c = blk.pivots[j];
    const std::uint64_t* const bj = rows + j * stride;
    for (std::size_t i = 0; i < j; ++i) {
      std::uint64_t* const bi = rows + i * stride;
      if ((bi[c >> 6] >> (c & 63)) & 1u) {
        for (std::size_t w = c >> 6; w < stride; ++w) bi[w] ^= bj[w];
      }
    }
  }
  const std::size_t len = stride - blk.first_word;
  blk.table = tables_.size();
  tables_.resize(blk.table + (std::size_t{1} << kBlock) * len, 0);
  std::uint64_t* const table = tables_.data() + blk.table;
  for (std::size_t index = 1; index < (std::size_t{1} << kBlock); ++index) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(index));
    const std::uint64_t* const prev = table + (index & (index - 1)) * len;
    const std::uint64_t* const row = rows + low * stride + blk.first_word;
    std::uint64_t* const entry = table + index * len;
    for (std::size_t w = 0; w < len; ++w) entry[w] = prev[w] ^ row[w];
  }
  blocks_.push_back(blk);
}

bool EchelonBasis::insert(const Vector& row) {
  if (Vector::word_count(row.size()) > stride_ || row.size() < cols_) {
    throw std::invalid_argument("basis row length mismatch");
  }
  auto buf = staging();
  std::copy(row.words().begin(), row.words().end(), buf.begin());
  return insert_staged();
}

Vector EchelonBasis::back_substitute(const Vector& rhs) const {
  if (rhs.size() != rank()) throw std::invalid_argument("back_substitute: one rhs bit per kept row");
  // Row r is zero at the pivots of rows before it, so walking backwards every
  // pivot it touches besides its own is already fixed.
  const std::size_t coeff_words = Vector::word_count(cols_);
  std::vector<std::uint64_t> v(coeff_words, 0);
  for (std::size_t r = rank(); r-- > 0;) {
    const std::uint64_t* b = data_.data() + r * stride_;
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < coeff_words; ++w) acc ^= b[w] & v[w];
    if ((std::popcount(acc) & 1) != static_cast<int>(rhs.get(r))) {
      v[pivots_[r] >> 6] |= std::uint64_t{1} << (pivots_[r] & 63);
    }
  }
  return Vector::from_words(cols_, std::move(v));
}

std::size_t max_independent_prefix(const Matrix& m) {
  EchelonBasis basis(m.cols());
  std::size_t p = 0;
  while (p < m.rows() && basis.insert(m.row(p))) ++p;
  return p;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

}  // namespace wetpaper::gf2
