#include "fuglede/tiling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fuglede/spectral.hpp"

namespace fuglede {

bool is_tiling_pair(const PointSet& e, const PointSet& t) {
  if (!(e.params() == t.params()))
    throw std::invalid_argument("is_tiling_pair: mismatched group parameters");
  const GroupParams params = e.params();
  const std::uint64_t n = params.order();
  if (n > kCoverTableGuard)
    throw feasibility_error("is_tiling_pair: multiplicity table over " + std::to_string(n) +
                            " cells exceeds the supported range");
  // |E||T| = p^d is necessary; combined with no cell hit twice it is also
  // sufficient for exact coverage.
  if (static_cast<std::uint64_t>(e.size()) * t.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (const auto& ev : e) {
    const std::uint64_t ei = lex_index(ev);
    for (const auto& tv : t) {
      const std::uint64_t cell = index_add(params, ei, lex_index(tv));
      if (seen[cell]) return false;
      seen[cell] = 1;
    }
  }
  return true;
}

TilingCertificate verify_tiling(const PointSet& e, const PointSet& t) {
  return TilingCertificate{e, t, is_tiling_pair(e, t)};
}

namespace {

struct CoverSearch {
  GroupParams params;
  std::uint64_t n;
  std::vector<std::uint64_t> e_indices;  // ascending
  std::vector<char> covered;
  std::uint64_t covered_count = 0;
  std::vector<std::uint64_t> partner;
  std::uint64_t nodes = 0;

  bool run() {
    if (covered_count == n) return true;
    std::uint64_t u = 0;
    while (covered[u]) ++u;
    for (const std::uint64_t ei : e_indices) {
      const std::uint64_t t = index_sub(params, u, ei);
      ++nodes;
      bool clash = false;
      for (const std::uint64_t fi : e_indices) {
        if (covered[index_add(params, fi, t)]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      for (const std::uint64_t fi : e_indices) covered[index_add(params, fi, t)] = 1;
      covered_count += e_indices.size();
      partner.push_back(t);
      if (run()) return true;
      partner.pop_back();
      covered_count -= e_indices.size();
      for (const std::uint64_t fi : e_indices) covered[index_add(params, fi, t)] = 0;
    }
    return false;
  }
};

}  // namespace

TilingSearchResult search_tiling_partner(const PointSet& e, std::uint64_t max_order) {
  if (e.empty()) throw std::invalid_argument("search_tiling_partner: empty set");
  const GroupParams params = e.params();
  const std::uint64_t n = params.order();
  // Arithmetic precheck first: a partner forces |E| | p^d. This must decide
  // the non-tiling case before any feasibility concern.
  if (n % e.size() != 0) return {};
  if (n > max_order)
    throw feasibility_error("tiling-partner search over " + std::to_string(n) +
                            " elements exceeds bound " + std::to_string(max_order));

  CoverSearch search{params, n, {}, std::vector<char>(n, 0), 0, {}, 0};
  search.e_indices.reserve(e.size());
  for (const auto& v : e) search.e_indices.push_back(lex_index(v));

  TilingSearchResult result;
  if (search.run()) {
    std::vector<GroupVector> out;
    out.reserve(search.partner.size());
    for (auto t : search.partner) out.push_back(vector_from_index(params, t));
    result.partner = PointSet(params, std::move(out));
  }
  result.nodes_explored = search.nodes;
  return result;
}

std::optional<PointSet> find_tiling_partner(const PointSet& e, std::uint64_t max_order) {
  return search_tiling_partner(e, max_order).partner;
}

std::optional<Subspace> find_subspace_partner(const PointSet& e, std::uint64_t max_order,
                                              std::uint64_t subspace_limit) {
  if (e.empty()) throw std::invalid_argument("find_subspace_partner: empty set");
  const GroupParams params = e.params();
  const std::uint64_t n = params.order();
  if (n % e.size() != 0) return std::nullopt;  // partner size would not be integral
  if (n > max_order)
    throw feasibility_error("subspace-partner search over " + std::to_string(n) +
                            " elements exceeds bound " + std::to_string(max_order));

  // |E| = p^k since it divides p^d.
  std::uint32_t k = 0;
  for (std::uint64_t s = e.size(); s > 1; s /= params.p()) ++k;
  const std::uint32_t dim_w = params.d() - k;

  SubspaceEnumerator en(params, dim_w, subspace_limit);
  while (auto w = en.next()) {
    if (is_tiling_pair(e, w->to_point_set(max_order))) return w;
  }
  return std::nullopt;
}

SubspaceAudit audit_subspace_partner_spectrum(const PointSet& e, std::uint64_t max_order,
                                              std::uint64_t subspace_limit) {
  SubspaceAudit audit;
  auto w = find_subspace_partner(e, max_order, subspace_limit);
  if (!w) return audit;
  audit.partner = *w;
  Subspace p = w->perp();
  audit.perp_spectrum = p;
  audit.status = is_spectrum(p.to_point_set(max_order), e) ? SubspaceAudit::Status::pass
                                                           : SubspaceAudit::Status::fail;
  return audit;
}

}  // namespace fuglede
