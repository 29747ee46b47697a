#include "fuglede/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fuglede {

bool CountingVector::constant() const {
  return std::all_of(counts.begin(), counts.end(),
                     [&](std::uint64_t c) { return c == counts[0]; });
}

std::uint64_t CountingVector::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

CountingVector counting_vector(const GroupVector& delta, const PointSet& e) {
  if (!(delta.params() == e.params()))
    throw std::invalid_argument("counting_vector: mismatched group parameters");
  CountingVector cv{e.params(), std::vector<std::uint64_t>(e.params().p(), 0)};
  for (const auto& v : e) ++cv.counts[dot(delta, v)];
  return cv;
}

bool chars_orthogonal(const GroupVector& a, const GroupVector& b, const PointSet& e) {
  if (e.empty()) throw std::invalid_argument("chars_orthogonal: empty base set");
  if (a == b) return false;
  return counting_vector(a - b, e).constant();
}

bool is_spectrum(const PointSet& a, const PointSet& e) {
  if (!(a.params() == e.params()))
    throw std::invalid_argument("is_spectrum: mismatched group parameters");
  if (a.size() != e.size()) return false;
  if (e.empty()) return true;  // both empty: vacuous
  const auto& elems = a.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!counting_vector(elems[i] - elems[j], e).constant()) return false;
  return true;
}

SpectrumCheck check_spectrum(const PointSet& a, const PointSet& e) {
  if (!(a.params() == e.params()))
    throw std::invalid_argument("check_spectrum: mismatched group parameters");
  SpectrumCheck result;
  const auto& elems = a.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      ++result.pairs_total;
      if (!e.empty() && counting_vector(elems[i] - elems[j], e).constant()) {
        ++result.pairs_orthogonal;
      } else if (!result.first_failure) {
        result.first_failure = {elems[i], elems[j]};
      }
    }
  result.pass = a.size() == e.size() && result.pairs_orthogonal == result.pairs_total &&
                !(e.empty() && !a.empty());
  return result;
}

OrthogonalityGraph::OrthogonalityGraph(PointSet base, std::uint64_t max_order) : base_(std::move(base)) {
  if (base_.empty()) throw std::invalid_argument("OrthogonalityGraph: empty base set");
  const std::uint64_t n = base_.params().order();
  if (n > max_order)
    throw feasibility_error("orthogonality graph over " + std::to_string(n) +
                            " vertices exceeds bound " + std::to_string(max_order));
  delta_orthogonal_.assign(n, 0);
  const std::uint32_t p = base_.params().p();
  std::vector<std::uint64_t> counts(p);
  for (std::uint64_t di = 1; di < n; ++di) {
    const GroupVector delta = vector_from_index(base_.params(), di);
    std::fill(counts.begin(), counts.end(), 0);
    for (const auto& v : base_) ++counts[dot(delta, v)];
    delta_orthogonal_[di] =
        std::all_of(counts.begin(), counts.end(), [&](std::uint64_t c) { return c == counts[0]; });
  }
}

bool OrthogonalityGraph::adjacent(const GroupVector& a, const GroupVector& b) const {
  if (a == b) return false;
  return delta_orthogonal(lex_index(a - b));
}

namespace {

// Ordered clique extension: candidates are ascending vertex indices, so the
// first clique reached is the lexicographically first one.
bool extend_clique(const OrthogonalityGraph& graph, std::size_t target,
                   std::vector<std::uint64_t>& clique, const std::vector<std::uint64_t>& cand) {
  if (clique.size() == target) return true;
  if (clique.size() + cand.size() < target) return false;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (clique.size() + (cand.size() - i) < target) return false;
    const std::uint64_t v = cand[i];
    std::vector<std::uint64_t> next;
    next.reserve(cand.size() - i);
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (graph.adjacent_indices(cand[j], v)) next.push_back(cand[j]);
    clique.push_back(v);
    if (extend_clique(graph, target, clique, next)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PointSet> find_spectrum(const PointSet& e, std::uint64_t max_order) {
  if (e.empty()) throw std::invalid_argument("find_spectrum: empty set");
  const GroupParams params = e.params();
  if (e.size() == 1)
    return PointSet(params, {GroupVector::zero(params)});
  if (e.size() % params.p() != 0) return std::nullopt;

  OrthogonalityGraph graph(e, max_order);
  const std::uint64_t n = graph.order();
  const std::size_t target = e.size();

  std::vector<std::uint64_t> clique{0};
  std::vector<std::uint64_t> cand;
  cand.reserve(n - 1);
  for (std::uint64_t v = 1; v < n; ++v)
    if (graph.delta_orthogonal(v)) cand.push_back(v);
  if (!extend_clique(graph, target, clique, cand)) return std::nullopt;

  std::vector<GroupVector> out;
  out.reserve(clique.size());
  for (auto idx : clique) out.push_back(vector_from_index(params, idx));
  return PointSet(params, std::move(out));
}

EquidistributionReport equidistribution_report(const PointSet& e, const GroupVector& delta) {
  if (delta.is_zero())
    throw std::invalid_argument("equidistribution_report: delta must be nonzero");
  EquidistributionReport report{counting_vector(delta, e), false};
  report.equidistributed = report.counts.constant();
  return report;
}

}  // namespace fuglede
