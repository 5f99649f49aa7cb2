#pragma once

#include <stdexcept>
#include <string>

namespace cdcover {

/// Bad arguments: out-of-range values, duplicate moduli, malformed shapes.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation was refused because it would exceed a configured limit
/// (e.g. a sieve period above the cap). The message names the offending
/// value and the limit.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested object provably does not exist (as opposed to the input
/// being malformed). Raised by constructions on shapes known infeasible.
class ProvenInfeasibleError : public std::runtime_error {
 public:
  explicit ProvenInfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A computed value contradicts an invariant that is supposed to hold for
/// every input in range. Always an implementation bug, never a data
/// condition; deliberately derived from logic_error.
class InternalContradictionError : public std::logic_error {
 public:
  explicit InternalContradictionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cdcover
