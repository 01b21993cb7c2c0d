#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lrcavail {

/// Dense row-major matrix over GF(2), each row packed into 64-bit words.
///
/// A matrix may have zero rows (an empty basis), but always has at least one
/// column.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::size_t cols,
                             const std::vector<std::vector<std::size_t>>& supports);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    Word& w = data_[r * words_per_row_ + c / kWordBits];
    const Word mask = Word{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row(std::size_t r) const {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<Word> row(std::size_t r) {
    return {data_.data() + r * words_per_row_, words_per_row_};
  }

  std::size_t row_weight(std::size_t r) const;
  std::size_t column_weight(std::size_t c) const;
  std::vector<std::size_t> row_support(std::size_t r) const;
  std::vector<std::size_t> column_support(std::size_t c) const;

  void append_row(std::span<const Word> words);

  BitMatrix transpose() const;
  BitMatrix select_columns(const std::vector<std::size_t>& columns) const;
  BitMatrix select_rows(const std::vector<std::size_t>& rows) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_per_row_;
  std::vector<Word> data_;
};

std::size_t popcount(std::span<const BitMatrix::Word> words);

struct RankNullspace {
  std::size_t rank;
  /// Rows form a basis of {v : M v^T = 0}; zero rows when M has full column rank.
  BitMatrix nullspace_basis;
};

std::size_t rank(const BitMatrix& m);
RankNullspace rank_and_nullspace(const BitMatrix& m);

/// Reduced row echelon form with zero rows removed; rows span the row space of m.
BitMatrix row_space_basis(const BitMatrix& m);

/// Product a * b^T, i.e. entry (i, j) is the GF(2) inner product of row i of a
/// and row j of b.
BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b);

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

}  // namespace lrcavail
