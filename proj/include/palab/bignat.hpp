#pragma once

// Arbitrary-precision unsigned integers plus the prime machinery that
// prime-power sequence codes are built from.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace palab {

using BigNat = boost::multiprecision::cpp_int;  // used non-negative only

// Number of bits in n (0 for n == 0).
inline std::uint64_t bit_length(const BigNat& n) {
  if (n == 0) return 0;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(n)) + 1;
}

// Growable prime table: nth_prime(0) == 2.
// O(1) amortized lookups after the sieve has grown past the index.
class Primes {
 public:
  std::uint64_t nth(std::size_t i);

  // Largest j such that nth(j) <= n, or npos if n < 2.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // All primes <= limit, sieved fresh (used by the factorization path).
  static std::vector<std::uint64_t> up_to(std::uint64_t limit);

 private:
  void grow();
  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_to_ = 1;
};

// Process-wide table; safe because all callers only append.
Primes& primes();

// p^e as a BigNat (e is a machine word; callers bound e before calling).
BigNat big_pow(std::uint64_t p, std::uint64_t e);

}  // namespace palab
