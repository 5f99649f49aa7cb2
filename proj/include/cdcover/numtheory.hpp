#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdcover/rational.hpp"

namespace cdcover {

/// One prime power p^exponent of a factorization.
struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization of a positive integer: primes strictly
/// ascending, exponents >= 1, empty for n = 1.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimePower> factors;

  /// Number of distinct prime divisors.
  int distinct_primes() const { return static_cast<int>(factors.size()); }
};

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// lcm of a nonempty list, exact at any size. Throws InvalidInputError on
/// an empty list or a value < 1.
BigInt lcm_values(std::span<const std::int64_t> values);

/// Solution of a two-congruence CRT instance: the unique class
/// residue mod modulus with modulus = lcm of the inputs.
struct CrtSolution {
  BigInt residue;
  BigInt modulus;

  friend bool operator==(const CrtSolution&, const CrtSolution&) = default;
};

/// General CRT for x = a1 (mod d1), x = a2 (mod d2); moduli need not be
/// coprime. Empty when the congruences are contradictory, i.e. when
/// a1 != a2 (mod gcd(d1, d2)).
std::optional<CrtSolution> crt_solve(std::int64_t a1, std::int64_t d1,
                                     std::int64_t a2, std::int64_t d2);

/// Trial division up to sqrt(n). Inputs are limited to what fits in a
/// signed 64-bit integer; throws InvalidInputError for n < 1.
Factorization factorize(std::int64_t n);

/// All divisors of n greater than 1, strictly ascending. Empty for n = 1.
std::vector<std::int64_t> divisors_gt1(std::int64_t n);

/// x in [0, m) with a*x = 1 (mod m), or empty when gcd(a, m) != 1.
/// Throws InvalidInputError for m < 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

}  // namespace cdcover
