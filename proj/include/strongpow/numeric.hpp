#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace strongpow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient C(a, b) with the vanishing convention: zero whenever
// a < 0, b < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

BigInt factorial(std::int64_t k);

// base^exp for exp >= 0.
BigInt power(const BigInt& base, std::int64_t exp);

// Factorials and powers of a fixed base, cached for the lifetime of one
// formula evaluation.
class CombinatoricsCache {
 public:
  BigInt factorial(std::int64_t k);
  BigInt binomial(std::int64_t a, std::int64_t b);

 private:
  std::vector<BigInt> factorials_{BigInt(1)};
};

class PowerCache {
 public:
  explicit PowerCache(BigInt base) : base_(std::move(base)) {}
  // By value: later calls may reallocate the table.
  BigInt operator()(std::int64_t exp);

 private:
  BigInt base_;
  std::vector<BigInt> powers_{BigInt(1)};
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);

}  // namespace strongpow
