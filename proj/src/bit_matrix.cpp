#include "lrcavail/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace lrcavail {

namespace {

struct Echelon {
  BitMatrix reduced;
  std::vector<std::size_t> pivot_columns;  // pivot_columns[i] is the pivot of row i
};

void xor_row(BitMatrix& m, std::size_t dst, std::size_t src) {
  auto d = m.row(dst);
  auto s = std::as_const(m).row(src);
  for (std::size_t w = 0; w < d.size(); ++w) d[w] ^= s[w];
}

void swap_rows(BitMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

// Gauss-Jordan elimination; rows past the rank are left zero.
Echelon reduce(BitMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t found = pivot_row;
    while (found < m.rows() && !m.get(found, c)) ++found;
    if (found == m.rows()) continue;
    swap_rows(m, pivot_row, found);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != pivot_row && m.get(r, c)) xor_row(m, r, pivot_row);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_((cols + kWordBits - 1) / kWordBits),
      data_(rows * words_per_row_, 0) {
  if (cols == 0) throw std::invalid_argument("BitMatrix: column count must be positive");
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols,
                               const std::vector<std::vector<std::size_t>>& supports) {
  BitMatrix m(supports.size(), cols);
  for (std::size_t r = 0; r < supports.size(); ++r) {
    for (std::size_t c : supports[r]) {
      if (c >= cols) throw std::out_of_range("BitMatrix::from_rows: column index out of range");
      m.set(r, c);
    }
  }
  return m;
}

std::size_t popcount(std::span<const BitMatrix::Word> words) {
  std::size_t total = 0;
  for (auto w : words) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitMatrix::row_weight(std::size_t r) const { return popcount(row(r)); }

std::size_t BitMatrix::column_weight(std::size_t c) const {
  std::size_t total = 0;
  for (std::size_t r = 0; r < rows_; ++r) total += get(r, c) ? 1 : 0;
  return total;
}

std::vector<std::size_t> BitMatrix::row_support(std::size_t r) const {
  std::vector<std::size_t> out;
  auto words = row(r);
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word bits = words[w];
    while (bits != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::size_t> BitMatrix::column_support(std::size_t c) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) out.push_back(r);
  }
  return out;
}

void BitMatrix::append_row(std::span<const Word> words) {
  if (words.size() != words_per_row_) {
    throw std::invalid_argument("BitMatrix::append_row: width mismatch");
  }
  data_.insert(data_.end(), words.begin(), words.end());
  ++rows_;
}

BitMatrix BitMatrix::transpose() const {
  if (rows_ == 0) throw std::invalid_argument("BitMatrix::transpose: matrix has no rows");
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : row_support(r)) t.set(c, r);
  }
  return t;
}

BitMatrix BitMatrix::select_columns(const std::vector<std::size_t>& columns) const {
  BitMatrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (get(r, columns[j])) out.set(r, j);
    }
  }
  return out;
}

BitMatrix BitMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  BitMatrix out(0, cols_);
  for (std::size_t r : rows) out.append_row(row(r));
  return out;
}

std::size_t rank(const BitMatrix& m) { return reduce(m).pivot_columns.size(); }

RankNullspace rank_and_nullspace(const BitMatrix& m) {
  Echelon e = reduce(m);
  const std::size_t rk = e.pivot_columns.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivot_columns) is_pivot[p] = true;

  BitMatrix basis(0, m.cols());
  std::vector<BitMatrix::Word> v(basis.words_per_row());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[f / BitMatrix::kWordBits] |= BitMatrix::Word{1} << (f % BitMatrix::kWordBits);
    for (std::size_t i = 0; i < rk; ++i) {
      if (e.reduced.get(i, f)) {
        const std::size_t p = e.pivot_columns[i];
        v[p / BitMatrix::kWordBits] |= BitMatrix::Word{1} << (p % BitMatrix::kWordBits);
      }
    }
    basis.append_row(v);
  }
  return {rk, std::move(basis)};
}

BitMatrix row_space_basis(const BitMatrix& m) {
  Echelon e = reduce(m);
  BitMatrix out(0, m.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) out.append_row(e.reduced.row(i));
  return out;
}

BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("multiply_transpose: width mismatch");
  BitMatrix out(a.rows(), std::max<std::size_t>(b.rows(), 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ra = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      auto rb = b.row(j);
      std::size_t parity = 0;
      for (std::size_t w = 0; w < ra.size(); ++w) {
        parity ^= static_cast<std::size_t>(std::popcount(ra[w] & rb[w]));
      }
      if (parity & 1U) out.set(i, j);
    }
  }
  return out;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: width mismatch");
  BitMatrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

}  // namespace lrcavail
