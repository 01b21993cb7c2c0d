#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace lrcavail {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when an exhaustive computation would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Floor division toward -infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Ceiling division toward +infinity.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

/// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& x);
double to_double(const Rational& x);

}  // namespace lrcavail
