#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "badred/exactmath/integer.hpp"

namespace badred {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

struct FactorBudget {
  std::uint64_t rho_iterations = 10'000'000;
  std::uint64_t trial_limit = 100'000;
};

// Deterministic for n < 3.3e24; above that, 64 Miller-Rabin rounds with
// bases drawn from a fixed-seed generator.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

// Factors |n| into primes, sorted ascending. Throws ZeroInput for n == 0 and
// BudgetExceeded (naming the unfactored cofactor) when Pollard rho gives up.
std::vector<PrimePower> factor_integer(const Integer& n, const FactorBudget& budget = {});

// Like factor_integer, but returns the stubborn cofactor instead of throwing.
struct PartialFactorization {
  std::vector<PrimePower> factors;
  Integer cofactor = 1;
};
PartialFactorization factor_integer_partial(const Integer& n, const FactorBudget& budget = {});

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

}  // namespace badred
