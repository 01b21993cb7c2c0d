#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lrcavail {

/// Element of a small finite field, labelled 0..q-1. Label 0 is the additive
/// identity and 1 the multiplicative identity; for q = p^e the label's base-p
/// digits are the polynomial coefficients (lowest digit = constant term).
using FieldElement = std::uint8_t;

/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power_decomposition(unsigned q);

/// GF(q) for prime powers 2 <= q <= 64, backed by full addition and
/// multiplication tables.
class FiniteField {
 public:
  static constexpr unsigned kMaxOrder = 64;

  /// Throws std::invalid_argument if q is not a prime power in [2, 64].
  explicit FiniteField(unsigned q);

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }

  FieldElement add(FieldElement a, FieldElement b) const { return add_[a * q_ + b]; }
  FieldElement mul(FieldElement a, FieldElement b) const { return mul_[a * q_ + b]; }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for a == 0.
  FieldElement inv(FieldElement a) const;

 private:
  unsigned q_;
  unsigned p_;
  std::vector<FieldElement> add_;
  std::vector<FieldElement> mul_;
  std::vector<FieldElement> neg_;
  std::vector<FieldElement> inv_;
};

/// Dense matrix over a FiniteField, stored as row vectors of labels.
using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// Rank by Gaussian elimination over the field.
std::size_t field_rank(const FiniteField& field, FieldMatrix m);

}  // namespace lrcavail
