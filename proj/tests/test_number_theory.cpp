#include "doctest.h"
#include "powerclass/number_theory.hpp"
#include "support/oracles.hpp"

using namespace powerclass;

TEST_CASE("factorize examples") {
  CHECK(factorize(15) == Factorization{{3, 1}, {5, 1}});
  CHECK(factorize(27) == Factorization{{3, 3}});
  CHECK(factorize(1).empty());
  CHECK(factorize(97) == Factorization{{97, 1}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorization multiplies back with increasing primes") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    std::uint64_t product = 1, last = 1;
    for (const auto& [p, e] : factorize(n)) {
      REQUIRE(p > last);
      REQUIRE(e >= 1);
      REQUIRE(oracle::brute_phi(p) == p - 1);  // p is prime
      for (unsigned i = 0; i < e; ++i) product *= p;
      last = p;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(15) == 8);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  for (std::uint64_t n = 1; n <= 1000; ++n) REQUIRE(euler_phi(n) == oracle::brute_phi(n));
}

TEST_CASE("prime powers exclude 1") {
  CHECK_FALSE(is_prime_power(1));
  CHECK(is_prime_power(2));
  CHECK(is_prime_power(27));
  CHECK_FALSE(is_prime_power(15));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(25));
}
