#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fuglede/group.hpp"

namespace fuglede {

// Spectrality is decided with exact integers only: the character sum of delta
// over E vanishes iff the p level-set counts #{e in E : <delta,e> = m} are all
// equal, so a counting vector fully replaces complex exponentials.

/// Level-set sizes of <delta, .> over a point set, indexed by residue.
struct CountingVector {
  GroupParams params;
  std::vector<std::uint64_t> counts;  // size p

  bool constant() const;
  std::uint64_t total() const;

  bool operator==(const CountingVector&) const = default;
};

CountingVector counting_vector(const GroupVector& delta, const PointSet& e);

/// True iff the characters indexed by a and b are orthogonal in L^2(E),
/// i.e. counting_vector(a - b, E) is constant. a == b returns false (a
/// character is never orthogonal to itself on nonempty E); empty E throws.
bool chars_orthogonal(const GroupVector& a, const GroupVector& b, const PointSet& e);

/// True iff A is a spectrum for E: |A| = |E| and all pairs of characters from
/// A are orthogonal on E. (|E| pairwise-orthogonal characters automatically
/// form a basis of the |E|-dimensional space.)
bool is_spectrum(const PointSet& a, const PointSet& e);

/// Like is_spectrum but scans every pair and reports statistics.
struct SpectrumCheck {
  bool pass = false;
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_orthogonal = 0;
  std::optional<std::pair<GroupVector, GroupVector>> first_failure;
};

SpectrumCheck check_spectrum(const PointSet& a, const PointSet& e);

/// Adjacency over the full group: a ~ b iff chars_orthogonal(a, b, E).
/// Adjacency depends only on a - b, so one flag per difference suffices.
class OrthogonalityGraph {
 public:
  explicit OrthogonalityGraph(PointSet base, std::uint64_t max_order = kDefaultFeasibilityBound);

  const PointSet& base() const { return base_; }
  const GroupParams& params() const { return base_.params(); }
  std::uint64_t order() const { return delta_orthogonal_.size(); }

  bool delta_orthogonal(std::uint64_t delta_index) const {
    return delta_orthogonal_[delta_index] != 0;
  }
  bool adjacent_indices(std::uint64_t i, std::uint64_t j) const {
    return i != j && delta_orthogonal(index_sub(base_.params(), i, j));
  }
  bool adjacent(const GroupVector& a, const GroupVector& b) const;

 private:
  PointSet base_;
  std::vector<char> delta_orthogonal_;
};

/// Finds a spectrum for E, or nullopt if none exists. The search pins 0 into
/// the candidate spectrum (translates of spectra are spectra) and extends a
/// clique in the orthogonality graph with vertices in lexicographic order, so
/// the result is the lexicographically first spectrum containing 0.
/// Shortcut: when |E| > 1 and p does not divide |E|, no constant counting
/// vector exists and the search returns nullopt immediately.
std::optional<PointSet> find_spectrum(const PointSet& e,
                                      std::uint64_t max_order = kDefaultFeasibilityBound);

/// Counting vector for one parallel hyperplane class plus a constancy flag.
struct EquidistributionReport {
  CountingVector counts;
  bool equidistributed = false;
};

EquidistributionReport equidistribution_report(const PointSet& e, const GroupVector& delta);

}  // namespace fuglede
