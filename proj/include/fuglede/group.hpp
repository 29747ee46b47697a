#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fuglede/common.hpp"

namespace fuglede {

// ---------------------------------------------------------------------------
// Modular arithmetic (p prime, p <= 10^4; intermediates fit in 64 bits)
// ---------------------------------------------------------------------------

constexpr Residue add_mod(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}

constexpr Residue sub_mod(Residue a, Residue b, Residue p) {
  return a >= b ? a - b : a + p - b;
}

constexpr Residue neg_mod(Residue a, Residue p) { return a == 0 ? 0 : p - a; }

constexpr Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((std::uint64_t{a} * b) % p);
}

Residue pow_mod(Residue base, std::uint64_t exp, Residue p);

/// Inverse of a nonzero residue mod a prime p.
Residue inv_mod(Residue a, Residue p);

/// Trial-division primality test for small n.
bool is_prime(std::uint32_t n);

// ---------------------------------------------------------------------------
// Quadratic residues
// ---------------------------------------------------------------------------

/// True iff c = t^2 (mod p) for some t; 0 counts as a square. Requires p an
/// odd prime (for p = 2 every residue is a square and the notion is useless).
bool is_square(Residue c, std::uint32_t p);

/// The least non-square in [2, p) for an odd prime p.
Residue smallest_nonsquare(std::uint32_t p);

// ---------------------------------------------------------------------------
// Group parameters
// ---------------------------------------------------------------------------

/// Ambient parameters of the group (Z/pZ)^d.
class GroupParams {
 public:
  GroupParams(std::uint32_t p, std::uint32_t d);

  std::uint32_t p() const { return p_; }
  std::uint32_t d() const { return d_; }

  /// p^d; throws feasibility_error when it does not fit 62 bits.
  std::uint64_t order() const;

  bool operator==(const GroupParams&) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t d_;
};

// ---------------------------------------------------------------------------
// Group vectors
// ---------------------------------------------------------------------------

/// An element of (Z/pZ)^d. Coordinates are stored reduced in [0, p).
class GroupVector {
 public:
  GroupVector(GroupParams params, std::vector<Residue> coords);

  static GroupVector zero(GroupParams params);

  const GroupParams& params() const { return params_; }
  const std::vector<Residue>& coords() const { return coords_; }
  Residue operator[](std::size_t k) const { return coords_[k]; }
  std::uint32_t dim() const { return params_.d(); }

  GroupVector operator+(const GroupVector& o) const;
  GroupVector operator-(const GroupVector& o) const;
  GroupVector operator-() const;

  bool is_zero() const;

  bool operator==(const GroupVector&) const = default;
  // Lexicographic on (p, d, coords); within one group this is plain
  // lexicographic coordinate order, first coordinate most significant.
  std::strong_ordering operator<=>(const GroupVector& o) const;

 private:
  GroupParams params_;
  std::vector<Residue> coords_;
};

/// a_1 x_1 + ... + a_d x_d mod p.
Residue dot(const GroupVector& a, const GroupVector& x);

// Rank of a vector in the lexicographic enumeration of the group, i.e. its
// base-p value with the first coordinate most significant. Index order and
// GroupVector ordering agree.
std::uint64_t lex_index(const GroupVector& v);
GroupVector vector_from_index(GroupParams params, std::uint64_t index);

// Digit-wise index arithmetic; avoids materializing vectors in hot loops.
std::uint64_t index_add(GroupParams params, std::uint64_t i, std::uint64_t j);
std::uint64_t index_sub(GroupParams params, std::uint64_t i, std::uint64_t j);

// ---------------------------------------------------------------------------
// Point sets
// ---------------------------------------------------------------------------

/// A finite subset of (Z/pZ)^d, kept sorted and deduplicated.
class PointSet {
 public:
  explicit PointSet(GroupParams params);
  PointSet(GroupParams params, std::vector<GroupVector> elements);

  const GroupParams& params() const { return params_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<GroupVector>& elements() const { return elements_; }
  bool contains(const GroupVector& v) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  PointSet translate(const GroupVector& v) const;

  bool operator==(const PointSet&) const = default;

 private:
  GroupParams params_;
  std::vector<GroupVector> elements_;  // sorted, unique
};

/// The whole group as a point set (guarded by max_order).
PointSet full_point_set(GroupParams params, std::uint64_t max_order = kDefaultFeasibilityBound);

// ---------------------------------------------------------------------------
// Matrices over F_p
// ---------------------------------------------------------------------------

/// A d x d matrix over Z/pZ (row-major entries).
class FpMatrix {
 public:
  FpMatrix(GroupParams params, std::vector<Residue> entries);

  static FpMatrix identity(GroupParams params);

  const GroupParams& params() const { return params_; }
  Residue at(std::uint32_t row, std::uint32_t col) const;

  GroupVector apply(const GroupVector& v) const;
  FpMatrix multiply(const FpMatrix& o) const;

  Residue determinant() const;
  bool invertible() const { return determinant() != 0; }
  std::optional<FpMatrix> inverse() const;

  bool operator==(const FpMatrix&) const = default;

 private:
  GroupParams params_;
  std::vector<Residue> entries_;
};

/// { M v : v in S }. Throws std::invalid_argument for singular M, since only
/// invertible maps preserve tiling/spectral status.
PointSet apply_map(const FpMatrix& m, const PointSet& s);

template <class URBG>
FpMatrix random_invertible(GroupParams params, URBG& rng) {
  std::uniform_int_distribution<Residue> dist(0, params.p() - 1);
  const std::size_t cells = std::size_t{params.d()} * params.d();
  for (;;) {
    std::vector<Residue> entries(cells);
    for (auto& e : entries) e = dist(rng);
    FpMatrix m(params, std::move(entries));
    if (m.invertible()) return m;
  }
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A linear subspace of (Z/pZ)^d, represented by its unique row-reduced
/// echelon basis. The zero subspace has an empty basis.
class Subspace {
 public:
  static Subspace from_spanning(GroupParams params, const std::vector<GroupVector>& spanning);
  static Subspace zero_subspace(GroupParams params);
  static Subspace full_space(GroupParams params);

  const GroupParams& params() const { return params_; }
  const std::vector<GroupVector>& basis() const { return basis_; }
  std::uint32_t dimension() const { return static_cast<std::uint32_t>(basis_.size()); }

  /// p^dimension; throws feasibility_error if it does not fit 62 bits.
  std::uint64_t cardinality() const;

  bool contains(const GroupVector& v) const;
  PointSet to_point_set(std::uint64_t max_size = kDefaultFeasibilityBound) const;

  /// { a : dot(a, w) = 0 for all w in the subspace }, in canonical form.
  Subspace perp() const;

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(GroupParams params, std::vector<GroupVector> basis);

  GroupParams params_;
  std::vector<GroupVector> basis_;

  friend class SubspaceEnumerator;
};

inline Subspace perp(const Subspace& w) { return w.perp(); }

/// Number of k-dimensional subspaces of (Z/pZ)^d (Gaussian binomial),
/// saturating at UINT64_MAX.
std::uint64_t subspace_count(GroupParams params, std::uint32_t k);

/// Streams every k-dimensional subspace exactly once, by canonical echelon
/// form: pivot-column sets in lexicographic order, free entries in odometer
/// order. Throws feasibility_error up front when the total count exceeds
/// the limit.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(GroupParams params, std::uint32_t k,
                     std::uint64_t limit = kDefaultSubspaceLimit);

  std::optional<Subspace> next();
  std::uint64_t total() const { return total_; }

 private:
  void rebuild_free_cells();
  bool advance();

  GroupParams params_;
  std::uint32_t k_;
  std::uint64_t total_;
  bool done_ = false;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells_;  // (row, col)
  std::vector<Residue> values_;
};

std::vector<Subspace> enumerate_subspaces(GroupParams params, std::uint32_t k,
                                          std::uint64_t limit = kDefaultSubspaceLimit);

}  // namespace fuglede
