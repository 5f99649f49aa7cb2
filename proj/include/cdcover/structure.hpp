#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cdcover/congruence.hpp"
#include "cdcover/rational.hpp"

namespace cdcover {

/// Necessary condition for n to admit a CD congruence set on its divisors:
/// with p the smallest prime dividing n, n/p must have fewer than p
/// distinct prime divisors.
struct Lemma3Result {
  bool passes = false;
  std::int64_t smallest_prime = 0;
  int distinct_primes_of_n_over_p = 0;
};

Lemma3Result lemma3_check(std::int64_t n);

/// Arithmetic shape of n relative to its smallest prime p.
/// Case1*: p divides n exactly once (split by parity of n);
/// Case2: p^2 | n. FailsLemma3 subsumes everything else.
enum class CaseTag { FailsLemma3, Case1a, Case1b, Case2 };

enum class BoundKind { ReciprocalSum, CdDensity };

std::string to_string(CaseTag tag);
std::string to_string(BoundKind kind);

/// Classification of n plus, when populated by t1_report, the exact bound
/// showing no CD congruence set on the divisors of n can cover everything.
struct CaseReport {
  std::int64_t n = 0;
  std::int64_t smallest_prime = 0;
  CaseTag tag = CaseTag::FailsLemma3;
  int distinct_primes_of_n_over_p = 0;
  std::optional<BoundKind> bound_kind;
  std::optional<Rational> bound_value;
  Rational bound_threshold = 1;  // the bound is always compared against 1
};

/// Shape classification only; bound fields left empty.
CaseReport classify(std::int64_t n);

/// Classification plus the case-specific bound:
///   Case1a, Case2   reciprocal sum over divisors > 1
///   Case1b, n = 2   reciprocal sum (single divisor, 1/2)
///   Case1b, n = 2q^a  exact CD density of the divisor moduli
/// For any n passing the Lemma-3 check the bound is provably < 1; a
/// computed value >= 1 raises InternalContradictionError.
CaseReport t1_report(std::int64_t n);

/// CD congruence set on the divisors of p^k: { p^(i-1) mod p^i }.
/// Density (p^k - 1) / (p^k (p - 1)).
CongruenceSet construct_prime_power(std::int64_t p, int k);

/// CD congruence set on the divisors of n = q p^k (distinct primes,
/// k = 1 or p > 2; for k = 1 the larger prime plays the role of p):
///
///   0 mod q,  p^(i-1)+1 mod p^i,  a q p^(j-1)+1 mod q p^j   (i, j in 1..k)
///
/// with a the smallest value in [1, p-1) distinct from q^(-1) mod p.
/// Density 1/q + (p^k - 1) / (p^k (p - 1)).
///
/// Throws ProvenInfeasibleError for n = q * 2^k with k >= 2 (no such set
/// exists) and InvalidInputError for every other shape.
CongruenceSet construct_q_pk(std::int64_t n);

}  // namespace cdcover
