#include "dupcodes/numeric.hpp"

#include <cmath>
#include <limits>

#include "dupcodes/error.hpp"

namespace dupcodes {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
  return binomial(n, k).convert_to<std::uint64_t>();
}

BigInt big_pow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

void enforce_guard(std::uint64_t q, std::uint64_t n, std::uint64_t guard, bool force,
                   const std::string& what) {
  if (force) return;
  if (checked_pow(q, n) > guard) {
    throw GuardExceeded(what + ": " + std::to_string(q) + "^" + std::to_string(n) +
                            " words is not enumerable",
                        guard);
  }
}

double log2_big(const BigInt& value) {
  if (value <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log2(value.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double log2_rational(const Rational& value) {
  return log2_big(boost::multiprecision::numerator(value)) -
         log2_big(boost::multiprecision::denominator(value));
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::string rational_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace dupcodes
