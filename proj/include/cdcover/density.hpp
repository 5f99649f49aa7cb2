#pragma once

#include <cstdint>
#include <span>

#include "cdcover/rational.hpp"

namespace cdcover {

/// Covered density of a coprime-disjoint congruence set with the given
/// moduli, by the alternating inclusion-exclusion sum over pairwise
/// coprime subsets:
///
///   sum 1/d_i  -  sum 1/(d_i * d_j)  +  sum 1/(d_i * d_j * d_k)  -  ...
///
/// where every product ranges over pairwise coprime moduli only. The
/// value depends on the moduli alone, never on residues. Exact; no
/// floating point. Moduli must be distinct and >= 2; an empty list
/// yields 0.
Rational density_formula(std::span<const std::int64_t> moduli);

/// Exact sum of reciprocals of a set of distinct moduli >= 2. At least 1
/// for the moduli of any covering set.
Rational sum_reciprocals(std::span<const std::int64_t> moduli);

/// Exact sum of 1/d over the divisors d > 1 of n, computed from the
/// factorization as a product of finite geometric sums minus 1.
Rational euler_divisor_sum(std::int64_t n);

/// p/(p-1), the infinite geometric series bound for sum of 1/p^j.
Rational geometric_upper_bound(std::int64_t p);

}  // namespace cdcover
