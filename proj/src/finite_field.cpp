#include "lrcavail/finite_field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace lrcavail {

namespace {

// Conway polynomials for the non-prime orders up to 64, as coefficient lists
// c_0..c_{e-1} of the monic degree-e polynomial x^e + c_{e-1}x^{e-1} + ... + c_0.
struct ConwayEntry {
  unsigned p;
  unsigned e;
  std::array<unsigned, 6> low;
};

constexpr std::array<ConwayEntry, 9> kConway{{
    {2, 2, {1, 1}},              // x^2 + x + 1
    {2, 3, {1, 1, 0}},           // x^3 + x + 1
    {2, 4, {1, 1, 0, 0}},        // x^4 + x + 1
    {2, 5, {1, 0, 1, 0, 0}},     // x^5 + x^2 + 1
    {2, 6, {1, 1, 0, 1, 1, 0}},  // x^6 + x^4 + x^3 + x + 1
    {3, 2, {2, 2}},              // x^2 + 2x + 2
    {3, 3, {1, 2, 0}},           // x^3 + 2x + 1
    {5, 2, {2, 4}},              // x^2 + 4x + 2
    {7, 2, {3, 6}},              // x^2 + 6x + 3
}};

bool is_prime(unsigned v) {
  if (v < 2) return false;
  for (unsigned d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> digits(unsigned value, unsigned p, unsigned e) {
  std::vector<unsigned> out(e);
  for (unsigned i = 0; i < e; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

std::optional<std::pair<unsigned, unsigned>> prime_power_decomposition(unsigned q) {
  if (q < 2) return std::nullopt;
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || !is_prime(p)) return std::nullopt;
  return std::make_pair(p, e);
}

FiniteField::FiniteField(unsigned q) : q_(q), p_(0) {
  auto pe = prime_power_decomposition(q);
  if (!pe || q > kMaxOrder) {
    throw std::invalid_argument("FiniteField: order " + std::to_string(q) +
                                " is not a prime power in [2, 64]");
  }
  p_ = pe->first;
  const unsigned e = pe->second;

  std::vector<unsigned> modulus;  // low coefficients of the reduction polynomial
  if (e > 1) {
    for (const auto& c : kConway) {
      if (c.p == p_ && c.e == e) modulus.assign(c.low.begin(), c.low.begin() + e);
    }
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  for (unsigned a = 0; a < q; ++a) {
    const auto da = digits(a, p_, e);
    for (unsigned b = 0; b < q; ++b) {
      const auto db = digits(b, p_, e);
      std::vector<unsigned> sum(e);
      for (unsigned i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = static_cast<FieldElement>(from_digits(sum, p_));

      // Schoolbook product followed by reduction with x^e = -(low coefficients).
      std::vector<unsigned> prod(2 * e, 0);
      for (unsigned i = 0; i < e; ++i) {
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      for (unsigned deg = 2 * e - 1; deg >= e && e > 1; --deg) {
        const unsigned lead = prod[deg];
        if (lead == 0) continue;
        prod[deg] = 0;
        for (unsigned i = 0; i < e; ++i) {
          prod[deg - e + i] = (prod[deg - e + i] + (p_ - modulus[i]) * lead) % p_;
        }
      }
      prod.resize(e);
      mul_[a * q + b] = static_cast<FieldElement>(from_digits(prod, p_));
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<FieldElement>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<FieldElement>(b);
    }
  }
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  return inv_[a];
}

std::size_t field_rank(const FiniteField& field, FieldMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
    std::size_t found = pivot_row;
    while (found < m.size() && m[found][c] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[pivot_row], m[found]);
    const FieldElement scale = field.inv(m[pivot_row][c]);
    for (auto& x : m[pivot_row]) x = field.mul(x, scale);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const FieldElement factor = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) {
        m[r][j] = field.sub(m[r][j], field.mul(factor, m[pivot_row][j]));
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace lrcavail
