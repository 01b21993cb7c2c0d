#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's elimination, enumeration or transform code.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lrcavail/availability_code.hpp"
#include "lrcavail/bit_matrix.hpp"
#include "lrcavail/constructions.hpp"
#include "lrcavail/finite_field.hpp"
#include "lrcavail/numeric.hpp"

namespace oracle {

using lrcavail::BigInt;
using lrcavail::BitMatrix;
using Dense = std::vector<std::vector<int>>;

inline Dense to_dense(const BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.get(i, j) ? 1 : 0;
  }
  return d;
}

inline BitMatrix from_dense(const Dense& d, std::size_t cols) {
  BitMatrix m(d.size(), cols);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, d[i][j] != 0);
  }
  return m;
}

// Plain row reduction on ints mod 2.
inline std::size_t rank_mod2(Dense d) {
  std::size_t rank = 0;
  const std::size_t cols = d.empty() ? 0 : d[0].size();
  for (std::size_t c = 0; c < cols && rank < d.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < d.size() && d[pivot][c] == 0) ++pivot;
    if (pivot == d.size()) continue;
    std::swap(d[pivot], d[rank]);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i != rank && d[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) d[i][j] ^= d[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, bit(rng));
  }
  return m;
}

// Weight counts of {x in F_2^n : rows . x = 0 for every row}, by scanning all 2^n words.
inline std::vector<BigInt> kernel_weights_direct(const BitMatrix& rows) {
  const std::size_t n = rows.cols();
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (rows.get(i, j)) mask |= std::uint64_t{1} << j;
    }
    masks.push_back(mask);
  }
  std::vector<BigInt> counts(n + 1, 0);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    bool ok = true;
    for (auto mask : masks) {
      if (std::popcount(mask & x) & 1) {
        ok = false;
        break;
      }
    }
    if (ok) counts[static_cast<std::size_t>(std::popcount(x))] += 1;
  }
  return counts;
}

// Minimum nonzero weight of ker(H) by scanning all words; 0 if the kernel is trivial.
inline std::size_t min_distance_direct(const BitMatrix& h) {
  const auto w = kernel_weights_direct(h);
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] != 0) return i;
  }
  return 0;
}

inline BigInt pascal_binomial(std::size_t n, std::size_t k) {
  std::vector<BigInt> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 0);
    next[0] = next[i] = 1;
    for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return k <= n ? row[k] : BigInt(0);
}

// K_j(i) as the z^j coefficient of (1 + (q-1) z)^(n-i) (1 - z)^i.
inline BigInt krawtchouk_genfun(unsigned q, std::size_t n, std::size_t j, std::size_t i) {
  std::vector<BigInt> poly{1};
  auto times = [&](const BigInt& a) {  // multiply by (1 + a z)
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + 1] += a * poly[d];
    }
    poly = std::move(next);
  };
  for (std::size_t s = 0; s < n - i; ++s) times(BigInt(q - 1));
  for (std::size_t s = 0; s < i; ++s) times(BigInt(-1));
  return j < poly.size() ? poly[j] : BigInt(0);
}

// Edges of K4 in lexicographic order as rows, vertices as columns.
inline BitMatrix k4_incidence() {
  return BitMatrix::from_rows(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Row multiset and column order ignored: tries all column permutations.
inline bool permutation_equivalent(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto sorted_rows = [](const BitMatrix& m, const std::vector<std::size_t>& perm) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::string s;
      for (auto c : perm) s.push_back(m.get(i, c) ? '1' : '0');
      rows.push_back(s);
    }
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  std::vector<std::size_t> perm(a.cols());
  std::iota(perm.begin(), perm.end(), 0);
  const auto target = sorted_rows(b, perm);
  do {
    if (sorted_rows(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Rows, columns and symbol classes of the cyclic Latin square of order s on an
// s x s grid: three pairwise orthogonal partitions of [s^2] for any s, which
// covers orders that are not prime powers.
inline lrcavail::PartitionFamily cyclic_grid_family(std::size_t s) {
  lrcavail::PartitionFamily fam;
  fam.n = s * s;
  fam.block_size = s;
  auto cell = [s](std::size_t i, std::size_t j) { return i * s + j + 1; };
  lrcavail::Partition rows, cols, syms;
  for (std::size_t a = 0; a < s; ++a) {
    lrcavail::Block r, c, y;
    for (std::size_t b = 0; b < s; ++b) {
      r.push_back(cell(a, b));
      c.push_back(cell(b, a));
      y.push_back(cell(b, (a + s - b) % s));  // cells with i + j = a mod s
    }
    std::sort(y.begin(), y.end());
    rows.push_back(r);
    cols.push_back(c);
    syms.push_back(y);
  }
  fam.partitions = {rows, cols, syms};
  return fam;
}

struct NamedCode {
  std::string label;
  lrcavail::AvailabilityCode code;
};

// Every strict code the constructions produce at desk scale.
inline std::vector<NamedCode> constructed_codes() {
  using namespace lrcavail;
  std::vector<NamedCode> out;
  auto add = [&](std::string label, AvailabilityCode c) {
    out.push_back({std::move(label), std::move(c)});
  };
  const std::vector<std::pair<std::size_t, std::size_t>> families{
      {1, 2}, {1, 3}, {1, 4}, {2, 2}, {3, 2}, {4, 2}, {2, 3}, {6, 2}};
  for (auto [r, g] : families) {
    const auto fam = build_partition_family(r, g);
    for (std::size_t t = 1; t <= fam.partitions.size(); ++t) {
      add("partition r=" + std::to_string(r) + " g=" + std::to_string(g) + " t=" +
              std::to_string(t),
          partition_code(fam, t));
    }
  }
  for (unsigned q : {2U, 3U, 4U, 5U, 7U}) {
    const FiniteField field(q);
    for (std::size_t t = 1; t <= q + 1; ++t) {
      add("functional q=" + std::to_string(q) + " t=" + std::to_string(t),
          functional_code(field, 2, 1, projective_functionals(field, t)));
    }
  }
  const std::vector<std::pair<std::size_t, std::size_t>> products{
      {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {3, 3}};
  for (auto [r, t] : products) {
    add("product r=" + std::to_string(r) + " t=" + std::to_string(t), product_code(r, t));
  }
  return out;
}

}  // namespace oracle
