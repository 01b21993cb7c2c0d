#include "lrcavail/availability_code.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace lrcavail {

std::string to_string(AvailabilityKind kind) {
  return kind == AvailabilityKind::strict ? "strict" : "general";
}

AvailabilityCode::AvailabilityCode(BitMatrix parity_check, std::size_t r, std::size_t t,
                                   AvailabilityKind kind, std::string construction,
                                   std::map<std::string, std::int64_t> parameters)
    : h_(std::move(parity_check)),
      r_(r),
      t_(t),
      kind_(kind),
      rank_(0),
      generator_(0, h_.cols()),
      construction_(std::move(construction)),
      parameters_(std::move(parameters)) {
  auto rn = rank_and_nullspace(h_);
  rank_ = rn.rank;
  generator_ = std::move(rn.nullspace_basis);
}

void for_each_codeword(const BitMatrix& basis,
                       const std::function<void(std::span<const BitMatrix::Word>)>& visit) {
  const std::size_t k = basis.rows();
  if (k > kMaxEnumerationDimension) {
    throw BudgetExceeded("codeword enumeration: dimension " + std::to_string(k) +
                         " exceeds limit " + std::to_string(kMaxEnumerationDimension));
  }
  std::vector<BitMatrix::Word> word(basis.words_per_row(), 0);
  visit(word);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < total; ++step) {
    // Gray code: consecutive words differ in the basis row at the lowest set bit.
    const auto flip = static_cast<std::size_t>(std::countr_zero(step));
    auto row = basis.row(flip);
    for (std::size_t w = 0; w < word.size(); ++w) word[w] ^= row[w];
    visit(word);
  }
}

void for_each_codeword_weight(const BitMatrix& basis,
                              const std::function<void(std::size_t)>& visit) {
  for_each_codeword(basis, [&](std::span<const BitMatrix::Word> w) { visit(popcount(w)); });
}

WeightDistribution span_weight_distribution(const BitMatrix& basis) {
  const std::size_t n = basis.cols();
  std::vector<std::uint64_t> counts(n + 1, 0);
  for_each_codeword_weight(basis, [&](std::size_t w) { ++counts[w]; });
  WeightDistribution dist;
  dist.n = n;
  dist.q = 2;
  dist.A.reserve(n + 1);
  for (auto c : counts) dist.A.emplace_back(c);
  return dist;
}

WeightDistribution weight_distribution(const AvailabilityCode& code) {
  return span_weight_distribution(code.generator());
}

}  // namespace lrcavail
