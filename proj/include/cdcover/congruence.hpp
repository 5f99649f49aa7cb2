#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdcover/rational.hpp"

namespace cdcover {

/// Default ceiling on the sieve period used by covered_residues and
/// everything built on it: one bit per residue, ~12.5 MB at the default.
inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

/// One residue class a mod d. The residue is normalized into [0, d) at
/// construction; moduli below 2 are rejected.
class Congruence {
 public:
  Congruence(std::int64_t residue, std::int64_t modulus);

  std::int64_t residue() const { return residue_; }
  std::int64_t modulus() const { return modulus_; }

  /// True iff x lies in this residue class.
  bool contains(std::int64_t x) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::int64_t residue_;
  std::int64_t modulus_;
};

/// A finite congruence set, kept sorted by modulus ascending with the lcm
/// period cached. Distinct moduli are enforced by the default constructor;
/// the few callers that legitimately need repeated moduli go through
/// with_repeats() and the set remembers it was built that way.
class CongruenceSet {
 public:
  CongruenceSet() = default;  // empty set, period 1
  explicit CongruenceSet(std::vector<Congruence> congruences);

  static CongruenceSet with_repeats(std::vector<Congruence> congruences);

  const std::vector<Congruence>& items() const { return items_; }
  const BigInt& period() const { return period_; }
  bool distinct_moduli() const { return distinct_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  std::vector<std::int64_t> moduli() const;

  friend bool operator==(const CongruenceSet&, const CongruenceSet&) = default;

 private:
  CongruenceSet(std::vector<Congruence> congruences, bool require_distinct);

  std::vector<Congruence> items_;
  BigInt period_ = 1;
  bool distinct_ = true;
};

/// True iff some integer lies in both classes; equivalently the residues
/// agree modulo gcd of the moduli.
bool overlaps(const Congruence& c1, const Congruence& c2);

/// Verdict of the coprime-disjointness check, with one offending pair
/// when it fails (a pair that overlaps while sharing a factor).
struct CdResult {
  bool ok = true;
  std::optional<std::pair<Congruence, Congruence>> violation;

  explicit operator bool() const { return ok; }
};

CdResult is_cd(const CongruenceSet& set);

bool covers_integer(const CongruenceSet& set, std::int64_t x);

/// Count of residue classes mod the period covered by the set.
struct CoverCount {
  std::uint64_t covered = 0;
  std::uint64_t period = 1;
};

/// Bit sieve over one full period: marks every class's arithmetic
/// progression and counts. Throws ResourceLimitError when the period
/// exceeds the cap (the message names both).
CoverCount covered_residues(const CongruenceSet& set,
                            std::uint64_t sieve_cap = kDefaultSieveCap);

/// Exact covered density m/D in lowest terms. Empty set has density 0.
Rational density_simulate(const CongruenceSet& set,
                          std::uint64_t sieve_cap = kDefaultSieveCap);

/// True iff every integer is covered, i.e. density is exactly 1.
bool is_covering(const CongruenceSet& set,
                 std::uint64_t sieve_cap = kDefaultSieveCap);

/// Shift every class by t: residues become (a + t) mod d.
CongruenceSet translate(const CongruenceSet& set, std::int64_t t);

}  // namespace cdcover
