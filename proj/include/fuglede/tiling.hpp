#pragma once

#include <optional>

#include "fuglede/group.hpp"

namespace fuglede {

/// Result of verifying one (E, T) candidate pair.
struct TilingCertificate {
  PointSet e;
  PointSet t;
  bool verified = false;
};

/// True iff the translates {E + t : t in T} partition the whole group.
/// Decided by a flat multiplicity table over all p^d elements.
bool is_tiling_pair(const PointSet& e, const PointSet& t);

TilingCertificate verify_tiling(const PointSet& e, const PointSet& t);

struct TilingSearchResult {
  std::optional<PointSet> partner;
  std::uint64_t nodes_explored = 0;
};

/// Exact-cover search for a tiling partner of E. If |E| does not divide p^d
/// the answer is decided arithmetically and no search (and no feasibility
/// check) happens. Otherwise the search repeatedly covers the least uncovered
/// element, branching over the translates t = u - e in element order of E.
TilingSearchResult search_tiling_partner(const PointSet& e,
                                         std::uint64_t max_order = kDefaultFeasibilityBound);

std::optional<PointSet> find_tiling_partner(const PointSet& e,
                                            std::uint64_t max_order = kDefaultFeasibilityBound);

/// First subspace W of dimension d - log_p |E| (in canonical enumeration
/// order) that tiles with E, or nullopt. Sizes that are not p-powers cannot
/// tile at all and return nullopt without search.
std::optional<Subspace> find_subspace_partner(
    const PointSet& e, std::uint64_t max_order = kDefaultFeasibilityBound,
    std::uint64_t subspace_limit = kDefaultSubspaceLimit);

/// Whenever E tiles with a subspace partner W, the characters indexed by the
/// orthogonal complement of W must form a spectrum for E. This audit finds a
/// subspace partner and checks that property; a `fail` status signals an
/// implementation bug, not a property of E.
struct SubspaceAudit {
  enum class Status { not_applicable, pass, fail };
  Status status = Status::not_applicable;
  std::optional<Subspace> partner;
  std::optional<Subspace> perp_spectrum;
};

SubspaceAudit audit_subspace_partner_spectrum(
    const PointSet& e, std::uint64_t max_order = kDefaultFeasibilityBound,
    std::uint64_t subspace_limit = kDefaultSubspaceLimit);

}  // namespace fuglede
