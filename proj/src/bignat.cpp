#include "palab/bignat.hpp"

#include <stdexcept>

namespace palab {

void Primes::grow() {
  // Double the sieve window each time; rebuild from scratch (cheap at this scale).
  std::uint64_t new_limit = sieved_to_ < 1024 ? 2048 : sieved_to_ * 2;
  primes_ = up_to(new_limit);
  sieved_to_ = new_limit;
}

std::uint64_t Primes::nth(std::size_t i) {
  while (i >= primes_.size()) grow();
  return primes_[i];
}

std::vector<std::uint64_t> Primes::up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return out;
}

Primes& primes() {
  static Primes table;
  return table;
}

BigNat big_pow(std::uint64_t p, std::uint64_t e) {
  if (e > 0xffffffffULL) throw std::overflow_error("big_pow: exponent too large");
  BigNat base = p;
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

}  // namespace palab
