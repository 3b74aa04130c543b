#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dupcodes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Default ceiling on the number of words an exhaustive routine may visit.
inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 20;

/// Binomial coefficient; zero whenever k < 0, n < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Same as binomial() for arguments whose value fits into 64 bits.
std::uint64_t binomial_u64(std::int64_t n, std::int64_t k);

BigInt big_pow(std::uint64_t base, std::uint64_t exponent);

/// q^n, or nullopt-like sentinel UINT64_MAX when it does not fit.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent);

/// Throws GuardExceeded when q^n exceeds the guard (unless force is set).
void enforce_guard(std::uint64_t q, std::uint64_t n, std::uint64_t guard, bool force,
                   const std::string& what);

double log2_big(const BigInt& value);
double log2_rational(const Rational& value);
double to_double(const Rational& value);

/// "p/q" rendering used in reports.
std::string rational_string(const Rational& value);

}  // namespace dupcodes
