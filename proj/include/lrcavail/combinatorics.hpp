#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrcavail/numeric.hpp"

namespace lrcavail {

BigInt binomial(std::size_t n, std::size_t k);

/// K_j(i) = sum_a (-1)^a (q-1)^(j-a) C(i,a) C(n-i,j-a).
/// Throws std::invalid_argument unless q >= 2, j <= n and i <= n.
BigInt krawtchouk(unsigned q, std::size_t n, std::size_t j, std::size_t i);

/// Weight enumerator of a q-ary code, optionally with the enumerator of its dual.
struct WeightDistribution {
  std::size_t n = 0;
  unsigned q = 2;
  std::vector<BigInt> A;                 // A[i] = #codewords of weight i, i = 0..n
  std::optional<std::vector<BigInt>> B;  // B[j] = #dual codewords of weight j

  BigInt size() const;
  /// The same pair of enumerators seen from the dual side.
  WeightDistribution swapped() const;
};

/// Returns e with q^e == value, or nullopt.
std::optional<std::size_t> exact_log(const BigInt& value, unsigned q);

/// Fills B via B_j = (1/|C|) sum_i A_i K_j(i).
/// Throws std::domain_error when A is not a valid distribution or some B_j
/// comes out fractional or negative.
WeightDistribution macwilliams_transform(const WeightDistribution& dist);

}  // namespace lrcavail
