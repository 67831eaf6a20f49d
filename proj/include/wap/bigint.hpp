#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wap {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

inline BigInt factorial(std::uint64_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

/// n! / (n - k)!, the k-th falling factorial of n; zero when k > n.
inline BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) result *= static_cast<unsigned long>(n - i);
  return result;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

inline BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

inline BigInt from_int64(std::int64_t v) {
  BigInt result;
  mpz_set_si(result.get_mpz_t(), static_cast<long>(v));
  return result;
}

}  // namespace wap
