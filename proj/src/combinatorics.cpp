#include "lrcavail/combinatorics.hpp"

#include <gmp.h>

#include <stdexcept>
#include <string>

namespace lrcavail {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.backend().data(), n, k);
  return out;
}

BigInt krawtchouk(unsigned q, std::size_t n, std::size_t j, std::size_t i) {
  if (q < 2 || j > n || i > n) {
    throw std::invalid_argument("krawtchouk: require q >= 2, j <= n, i <= n (q=" +
                                std::to_string(q) + ", n=" + std::to_string(n) +
                                ", j=" + std::to_string(j) + ", i=" + std::to_string(i) + ")");
  }
  BigInt sum = 0;
  for (std::size_t a = 0; a <= j; ++a) {
    if (a > i || j - a > n - i) continue;
    BigInt term = binomial(i, a) * binomial(n - i, j - a);
    term *= boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(j - a));
    if (a % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt WeightDistribution::size() const {
  BigInt total = 0;
  for (const auto& a : A) total += a;
  return total;
}

WeightDistribution WeightDistribution::swapped() const {
  if (!B) throw std::logic_error("WeightDistribution::swapped: dual enumerator missing");
  WeightDistribution out{n, q, *B, A};
  return out;
}

std::optional<std::size_t> exact_log(const BigInt& value, unsigned q) {
  if (value < 1) return std::nullopt;
  BigInt v = value;
  std::size_t e = 0;
  while (v > 1) {
    if (v % q != 0) return std::nullopt;
    v /= q;
    ++e;
  }
  return e;
}

WeightDistribution macwilliams_transform(const WeightDistribution& dist) {
  if (dist.A.size() != dist.n + 1) {
    throw std::domain_error("macwilliams_transform: A must have n+1 entries");
  }
  if (dist.A[0] != 1) throw std::domain_error("macwilliams_transform: A_0 must be 1");
  for (const auto& a : dist.A) {
    if (a < 0) throw std::domain_error("macwilliams_transform: negative A_i");
  }
  const BigInt size = dist.size();
  if (!exact_log(size, dist.q)) {
    throw std::domain_error("macwilliams_transform: code size " + size.str() +
                            " is not a power of q");
  }

  std::vector<BigInt> B(dist.n + 1);
  for (std::size_t j = 0; j <= dist.n; ++j) {
    BigInt acc = 0;
    for (std::size_t i = 0; i <= dist.n; ++i) {
      if (dist.A[i] != 0) acc += dist.A[i] * krawtchouk(dist.q, dist.n, j, i);
    }
    if (acc % size != 0 || acc < 0) {
      throw std::domain_error("macwilliams_transform: B_" + std::to_string(j) +
                              " is not a nonnegative integer; input is not a weight distribution");
    }
    B[j] = acc / size;
  }
  WeightDistribution out = dist;
  out.B = std::move(B);
  return out;
}

}  // namespace lrcavail
