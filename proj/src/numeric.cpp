#include "strongpow/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace strongpow {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigInt factorial(std::int64_t k) {
  if (k < 0) throw std::domain_error("factorial of negative integer");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= k; ++i) result *= i;
  return result;
}

BigInt power(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw std::domain_error("negative exponent in integer power");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

BigInt CombinatoricsCache::factorial(std::int64_t k) {
  if (k < 0) throw std::domain_error("factorial of negative integer");
  while (static_cast<std::int64_t>(factorials_.size()) <= k) {
    BigInt next = factorials_.back() * static_cast<std::int64_t>(factorials_.size());
    factorials_.push_back(std::move(next));
  }
  return factorials_[static_cast<std::size_t>(k)];
}

BigInt CombinatoricsCache::binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  return factorial(a) / (factorial(b) * factorial(a - b));
}

BigInt PowerCache::operator()(std::int64_t exp) {
  if (exp < 0) throw std::domain_error("negative exponent in integer power");
  while (static_cast<std::int64_t>(powers_.size()) <= exp) {
    BigInt next = powers_.back() * base_;
    powers_.push_back(std::move(next));
  }
  return powers_[static_cast<std::size_t>(exp)];
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace strongpow
