#include "lrcavail/numeric.hpp"

#include <gmp.h>

namespace lrcavail {

BigInt floor(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q;
  mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
  return q;
}

BigInt ceil(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  BigInt q;
  mpz_cdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
  return q;
}

std::string to_string(const Rational& x) {
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace lrcavail
