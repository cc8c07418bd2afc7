#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace powerclass {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::uint64_t n);

/// Euler's totient, computed from the factorization. euler_phi(1) == 1.
std::uint64_t euler_phi(std::uint64_t n);

/// True iff n = p^k with p prime and k >= 1. 1 is not a prime power.
bool is_prime_power(std::uint64_t n);

bool is_prime(std::uint64_t n);

}  // namespace powerclass
