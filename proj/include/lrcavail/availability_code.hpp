#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "lrcavail/bit_matrix.hpp"
#include "lrcavail/combinatorics.hpp"

namespace lrcavail {

enum class AvailabilityKind { strict, general };

std::string to_string(AvailabilityKind kind);

/// Binary linear code given as the null space of a parity-check matrix, with
/// its declared locality r and availability t.
class AvailabilityCode {
 public:
  AvailabilityCode(BitMatrix parity_check, std::size_t r, std::size_t t,
                   AvailabilityKind kind = AvailabilityKind::general,
                   std::string construction = "custom",
                   std::map<std::string, std::int64_t> parameters = {});

  const BitMatrix& parity_check() const { return h_; }
  std::size_t n() const { return h_.cols(); }
  std::size_t m() const { return h_.rows(); }
  std::size_t r() const { return r_; }
  std::size_t t() const { return t_; }
  AvailabilityKind kind() const { return kind_; }
  std::size_t rank() const { return rank_; }
  std::size_t k() const { return n() - rank_; }
  Rational rate() const { return Rational(k(), n()); }
  /// Rows form a generator matrix (basis of the null space of H).
  const BitMatrix& generator() const { return generator_; }

  const std::string& construction() const { return construction_; }
  const std::map<std::string, std::int64_t>& parameters() const { return parameters_; }

 private:
  BitMatrix h_;
  std::size_t r_;
  std::size_t t_;
  AvailabilityKind kind_;
  std::size_t rank_;
  BitMatrix generator_;
  std::string construction_;
  std::map<std::string, std::int64_t> parameters_;
};

/// Largest code dimension accepted by exhaustive codeword enumeration.
inline constexpr std::size_t kMaxEnumerationDimension = 28;

/// Visits every codeword spanned by the rows of `basis` (including zero) in
/// Gray-code order. Throws BudgetExceeded when the basis has more than
/// kMaxEnumerationDimension rows.
void for_each_codeword(const BitMatrix& basis,
                       const std::function<void(std::span<const BitMatrix::Word>)>& visit);

/// Same enumeration, reporting only Hamming weights.
void for_each_codeword_weight(const BitMatrix& basis,
                              const std::function<void(std::size_t)>& visit);

/// Exhaustive weight distribution of the code (A only, q = 2).
WeightDistribution weight_distribution(const AvailabilityCode& code);

/// Weight distribution of the row space of `basis`, by enumeration.
WeightDistribution span_weight_distribution(const BitMatrix& basis);

}  // namespace lrcavail
