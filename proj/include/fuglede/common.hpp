#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fuglede {

/// A residue mod p, always stored fully reduced in [0, p).
using Residue = std::uint32_t;

// Workload guards. Search routines refuse groups larger than these unless the
// caller raises the bound explicitly.
inline constexpr std::uint64_t kDefaultFeasibilityBound = 4096;    // max p^d for searches
inline constexpr std::uint64_t kDefaultSubspaceLimit = 1'000'000;  // max subspaces enumerated
inline constexpr std::uint64_t kDefaultProveOrderBound = 16;       // max p^d for full 2^(p^d) enumeration
inline constexpr std::uint64_t kMaxProveOrder = 28;                // hard cap even when forced
inline constexpr std::uint64_t kCoverTableGuard = std::uint64_t{1} << 26;  // max multiplicity-table cells

/// Thrown when a requested computation is exact but too large to attempt.
class feasibility_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the set-file loader; carries the offending line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fuglede
