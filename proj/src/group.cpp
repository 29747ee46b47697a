#include "fuglede/group.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fuglede {

namespace {

constexpr std::uint32_t kMaxPrime = 10'000;
constexpr std::uint32_t kMaxRank = 64;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;

void require_same_params(const GroupParams& a, const GroupParams& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": mismatched group parameters");
}

}  // namespace

Residue pow_mod(Residue base, std::uint64_t exp, Residue p) {
  std::uint64_t result = 1;
  std::uint64_t b = base % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<Residue>(result);
}

Residue inv_mod(Residue a, Residue p) {
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);  // Fermat; p prime
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

bool is_square(Residue c, std::uint32_t p) {
  if (p == 2) throw std::invalid_argument("is_square: p = 2 unsupported (every residue is a square)");
  if (!is_prime(p)) throw std::invalid_argument("is_square: p must be prime");
  if (c >= p) throw std::invalid_argument("is_square: residue out of range");
  if (c == 0) return true;
  // Euler's criterion.
  return pow_mod(c, (p - 1) / 2, p) == 1;
}

Residue smallest_nonsquare(std::uint32_t p) {
  if (p == 2) throw std::invalid_argument("smallest_nonsquare: p = 2 has no non-square");
  for (Residue n = 2; n < p; ++n)
    if (!is_square(n, p)) return n;
  throw std::logic_error("smallest_nonsquare: no non-square found (p not an odd prime?)");
}

// ---------------------------------------------------------------------------
// GroupParams
// ---------------------------------------------------------------------------

GroupParams::GroupParams(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
  if (p < 2 || p > kMaxPrime || !is_prime(p))
    throw std::invalid_argument("GroupParams: p must be a prime in [2, 10^4]");
  if (d < 1 || d > kMaxRank) throw std::invalid_argument("GroupParams: d must be in [1, 64]");
}

std::uint64_t GroupParams::order() const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (r > kMaxOrder / p_)
      throw feasibility_error("group order p^d exceeds the supported 2^62 range");
    r *= p_;
  }
  return r;
}

// ---------------------------------------------------------------------------
// GroupVector
// ---------------------------------------------------------------------------

GroupVector::GroupVector(GroupParams params, std::vector<Residue> coords)
    : params_(params), coords_(std::move(coords)) {
  if (coords_.size() != params_.d())
    throw std::invalid_argument("GroupVector: expected exactly d coordinates");
  for (auto& c : coords_) c %= params_.p();
}

GroupVector GroupVector::zero(GroupParams params) {
  return GroupVector(params, std::vector<Residue>(params.d(), 0));
}

GroupVector GroupVector::operator+(const GroupVector& o) const {
  require_same_params(params_, o.params_, "GroupVector::operator+");
  std::vector<Residue> out(coords_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k)
    out[k] = add_mod(coords_[k], o.coords_[k], params_.p());
  return GroupVector(params_, std::move(out));
}

GroupVector GroupVector::operator-(const GroupVector& o) const {
  require_same_params(params_, o.params_, "GroupVector::operator-");
  std::vector<Residue> out(coords_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k)
    out[k] = sub_mod(coords_[k], o.coords_[k], params_.p());
  return GroupVector(params_, std::move(out));
}

GroupVector GroupVector::operator-() const {
  std::vector<Residue> out(coords_.size());
  for (std::size_t k = 0; k < coords_.size(); ++k) out[k] = neg_mod(coords_[k], params_.p());
  return GroupVector(params_, std::move(out));
}

bool GroupVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Residue c) { return c == 0; });
}

std::strong_ordering GroupVector::operator<=>(const GroupVector& o) const {
  if (auto c = params_.p() <=> o.params_.p(); c != 0) return c;
  if (auto c = params_.d() <=> o.params_.d(); c != 0) return c;
  return std::lexicographical_compare_three_way(coords_.begin(), coords_.end(),
                                                o.coords_.begin(), o.coords_.end());
}

Residue dot(const GroupVector& a, const GroupVector& x) {
  require_same_params(a.params(), x.params(), "dot");
  const Residue p = a.params().p();
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < a.coords().size(); ++k)
    acc += std::uint64_t{a[k]} * x[k] % p;
  return static_cast<Residue>(acc % p);
}

std::uint64_t lex_index(const GroupVector& v) {
  std::uint64_t idx = 0;
  for (Residue c : v.coords()) idx = idx * v.params().p() + c;
  return idx;
}

GroupVector vector_from_index(GroupParams params, std::uint64_t index) {
  std::vector<Residue> coords(params.d());
  for (std::uint32_t k = params.d(); k-- > 0;) {
    coords[k] = static_cast<Residue>(index % params.p());
    index /= params.p();
  }
  return GroupVector(params, std::move(coords));
}

std::uint64_t index_add(GroupParams params, std::uint64_t i, std::uint64_t j) {
  const std::uint64_t p = params.p();
  std::uint64_t out = 0, w = 1;
  for (std::uint32_t k = 0; k < params.d(); ++k) {
    out += (i % p + j % p) % p * w;
    i /= p;
    j /= p;
    w *= p;
  }
  return out;
}

std::uint64_t index_sub(GroupParams params, std::uint64_t i, std::uint64_t j) {
  const std::uint64_t p = params.p();
  std::uint64_t out = 0, w = 1;
  for (std::uint32_t k = 0; k < params.d(); ++k) {
    out += (i % p + p - j % p) % p * w;
    i /= p;
    j /= p;
    w *= p;
  }
  return out;
}

// ---------------------------------------------------------------------------
// PointSet
// ---------------------------------------------------------------------------

PointSet::PointSet(GroupParams params) : params_(params) {}

PointSet::PointSet(GroupParams params, std::vector<GroupVector> elements)
    : params_(params), elements_(std::move(elements)) {
  for (const auto& v : elements_)
    require_same_params(params_, v.params(), "PointSet");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PointSet::contains(const GroupVector& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

PointSet PointSet::translate(const GroupVector& v) const {
  require_same_params(params_, v.params(), "PointSet::translate");
  std::vector<GroupVector> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e + v);
  return PointSet(params_, std::move(out));
}

PointSet full_point_set(GroupParams params, std::uint64_t max_order) {
  const std::uint64_t n = params.order();
  if (n > max_order)
    throw feasibility_error("full_point_set: group order " + std::to_string(n) +
                            " exceeds bound " + std::to_string(max_order));
  std::vector<GroupVector> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(vector_from_index(params, i));
  return PointSet(params, std::move(out));
}

// ---------------------------------------------------------------------------
// FpMatrix
// ---------------------------------------------------------------------------

FpMatrix::FpMatrix(GroupParams params, std::vector<Residue> entries)
    : params_(params), entries_(std::move(entries)) {
  const std::size_t cells = std::size_t{params_.d()} * params_.d();
  if (entries_.size() != cells)
    throw std::invalid_argument("FpMatrix: expected d*d entries");
  for (auto& e : entries_) e %= params_.p();
}

FpMatrix FpMatrix::identity(GroupParams params) {
  const std::uint32_t d = params.d();
  std::vector<Residue> entries(std::size_t{d} * d, 0);
  for (std::uint32_t i = 0; i < d; ++i) entries[std::size_t{i} * d + i] = 1;
  return FpMatrix(params, std::move(entries));
}

Residue FpMatrix::at(std::uint32_t row, std::uint32_t col) const {
  return entries_[std::size_t{row} * params_.d() + col];
}

GroupVector FpMatrix::apply(const GroupVector& v) const {
  require_same_params(params_, v.params(), "FpMatrix::apply");
  const std::uint32_t d = params_.d();
  const Residue p = params_.p();
  std::vector<Residue> out(d, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < d; ++j) acc += std::uint64_t{at(i, j)} * v[j] % p;
    out[i] = static_cast<Residue>(acc % p);
  }
  return GroupVector(params_, std::move(out));
}

FpMatrix FpMatrix::multiply(const FpMatrix& o) const {
  require_same_params(params_, o.params_, "FpMatrix::multiply");
  const std::uint32_t d = params_.d();
  const Residue p = params_.p();
  std::vector<Residue> out(std::size_t{d} * d, 0);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) {
      std::uint64_t acc = 0;
      for (std::uint32_t k = 0; k < d; ++k) acc += std::uint64_t{at(i, k)} * o.at(k, j) % p;
      out[std::size_t{i} * d + j] = static_cast<Residue>(acc % p);
    }
  return FpMatrix(params_, std::move(out));
}

Residue FpMatrix::determinant() const {
  const std::uint32_t d = params_.d();
  const Residue p = params_.p();
  std::vector<Residue> m = entries_;
  auto cell = [&](std::uint32_t r, std::uint32_t c) -> Residue& {
    return m[std::size_t{r} * d + c];
  };
  Residue det = 1;
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = col;
    while (pivot < d && cell(pivot, col) == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      for (std::uint32_t c = 0; c < d; ++c) std::swap(cell(pivot, c), cell(col, c));
      det = neg_mod(det, p);
    }
    const Residue pv = cell(col, col);
    det = mul_mod(det, pv, p);
    const Residue pv_inv = inv_mod(pv, p);
    for (std::uint32_t r = col + 1; r < d; ++r) {
      const Residue factor = mul_mod(cell(r, col), pv_inv, p);
      if (factor == 0) continue;
      for (std::uint32_t c = col; c < d; ++c)
        cell(r, c) = sub_mod(cell(r, c), mul_mod(factor, cell(col, c), p), p);
    }
  }
  return det;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
  const std::uint32_t d = params_.d();
  const Residue p = params_.p();
  std::vector<Residue> m = entries_;
  std::vector<Residue> inv = FpMatrix::identity(params_).entries_;
  auto mc = [&](std::uint32_t r, std::uint32_t c) -> Residue& { return m[std::size_t{r} * d + c]; };
  auto ic = [&](std::uint32_t r, std::uint32_t c) -> Residue& { return inv[std::size_t{r} * d + c]; };
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = col;
    while (pivot < d && mc(pivot, col) == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    if (pivot != col)
      for (std::uint32_t c = 0; c < d; ++c) {
        std::swap(mc(pivot, c), mc(col, c));
        std::swap(ic(pivot, c), ic(col, c));
      }
    const Residue pv_inv = inv_mod(mc(col, col), p);
    for (std::uint32_t c = 0; c < d; ++c) {
      mc(col, c) = mul_mod(mc(col, c), pv_inv, p);
      ic(col, c) = mul_mod(ic(col, c), pv_inv, p);
    }
    for (std::uint32_t r = 0; r < d; ++r) {
      if (r == col || mc(r, col) == 0) continue;
      const Residue factor = mc(r, col);
      for (std::uint32_t c = 0; c < d; ++c) {
        mc(r, c) = sub_mod(mc(r, c), mul_mod(factor, mc(col, c), p), p);
        ic(r, c) = sub_mod(ic(r, c), mul_mod(factor, ic(col, c), p), p);
      }
    }
  }
  return FpMatrix(params_, std::move(inv));
}

PointSet apply_map(const FpMatrix& m, const PointSet& s) {
  require_same_params(m.params(), s.params(), "apply_map");
  if (!m.invertible())
    throw std::invalid_argument("apply_map: matrix is singular");
  std::vector<GroupVector> out;
  out.reserve(s.size());
  for (const auto& v : s) out.push_back(m.apply(v));
  return PointSet(s.params(), std::move(out));
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

namespace {

// In-place row reduction over F_p; returns rows in reduced echelon form with
// zero rows dropped.
std::vector<std::vector<Residue>> rref(GroupParams params, std::vector<std::vector<Residue>> rows) {
  const std::uint32_t d = params.d();
  const Residue p = params.p();
  std::size_t rank = 0;
  for (std::uint32_t col = 0; col < d && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Residue inv = inv_mod(rows[rank][col], p);
    for (std::uint32_t c = 0; c < d; ++c) rows[rank][c] = mul_mod(rows[rank][c], inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Residue factor = rows[r][col];
      for (std::uint32_t c = 0; c < d; ++c)
        rows[r][c] = sub_mod(rows[r][c], mul_mod(factor, rows[rank][c], p), p);
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

Subspace::Subspace(GroupParams params, std::vector<GroupVector> basis)
    : params_(params), basis_(std::move(basis)) {}

Subspace Subspace::from_spanning(GroupParams params, const std::vector<GroupVector>& spanning) {
  std::vector<std::vector<Residue>> rows;
  rows.reserve(spanning.size());
  for (const auto& v : spanning) {
    require_same_params(params, v.params(), "Subspace::from_spanning");
    rows.push_back(v.coords());
  }
  rows = rref(params, std::move(rows));
  std::vector<GroupVector> basis;
  basis.reserve(rows.size());
  for (auto& r : rows) basis.emplace_back(params, std::move(r));
  return Subspace(params, std::move(basis));
}

Subspace Subspace::zero_subspace(GroupParams params) { return Subspace(params, {}); }

Subspace Subspace::full_space(GroupParams params) {
  std::vector<GroupVector> basis;
  for (std::uint32_t i = 0; i < params.d(); ++i) {
    std::vector<Residue> coords(params.d(), 0);
    coords[i] = 1;
    basis.emplace_back(params, std::move(coords));
  }
  return Subspace(params, std::move(basis));
}

std::uint64_t Subspace::cardinality() const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < dimension(); ++i) {
    if (r > (std::uint64_t{1} << 62) / params_.p())
      throw feasibility_error("subspace cardinality exceeds the supported range");
    r *= params_.p();
  }
  return r;
}

bool Subspace::contains(const GroupVector& v) const {
  require_same_params(params_, v.params(), "Subspace::contains");
  const Residue p = params_.p();
  std::vector<Residue> rem = v.coords();
  for (const auto& row : basis_) {
    std::uint32_t pivot = 0;
    while (pivot < params_.d() && row[pivot] == 0) ++pivot;
    const Residue coeff = rem[pivot];
    if (coeff == 0) continue;
    for (std::uint32_t c = 0; c < params_.d(); ++c)
      rem[c] = sub_mod(rem[c], mul_mod(coeff, row[c], p), p);
  }
  return std::all_of(rem.begin(), rem.end(), [](Residue c) { return c == 0; });
}

PointSet Subspace::to_point_set(std::uint64_t max_size) const {
  const std::uint64_t card = cardinality();
  if (card > max_size)
    throw feasibility_error("subspace has " + std::to_string(card) +
                            " points, exceeding bound " + std::to_string(max_size));
  const std::uint32_t k = dimension();
  std::vector<GroupVector> out;
  out.reserve(card);
  std::vector<Residue> coeff(k, 0);
  for (std::uint64_t count = 0; count < card; ++count) {
    GroupVector v = GroupVector::zero(params_);
    for (std::uint32_t i = 0; i < k; ++i) {
      if (coeff[i] == 0) continue;
      std::vector<Residue> scaled(params_.d());
      for (std::uint32_t c = 0; c < params_.d(); ++c)
        scaled[c] = mul_mod(coeff[i], basis_[i][c], params_.p());
      v = v + GroupVector(params_, std::move(scaled));
    }
    out.push_back(std::move(v));
    for (std::uint32_t i = k; i-- > 0;) {
      if (++coeff[i] < params_.p()) break;
      coeff[i] = 0;
    }
  }
  return PointSet(params_, std::move(out));
}

Subspace Subspace::perp() const {
  const std::uint32_t d = params_.d();
  const Residue p = params_.p();
  std::vector<std::uint32_t> pivots;
  pivots.reserve(basis_.size());
  for (const auto& row : basis_) {
    std::uint32_t c = 0;
    while (c < d && row[c] == 0) ++c;
    pivots.push_back(c);
  }
  std::vector<bool> is_pivot(d, false);
  for (auto c : pivots) is_pivot[c] = true;

  // One nullspace generator per free column.
  std::vector<GroupVector> gens;
  for (std::uint32_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Residue> v(d, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) v[pivots[i]] = neg_mod(basis_[i][f], p);
    gens.emplace_back(params_, std::move(v));
  }
  return from_spanning(params_, gens);
}

// ---------------------------------------------------------------------------
// Subspace enumeration
// ---------------------------------------------------------------------------

std::uint64_t subspace_count(GroupParams params, std::uint32_t k) {
  const std::uint32_t d = params.d();
  if (k > d) return 0;
  // Gaussian binomial via the recurrence [d,k] = [d-1,k-1] + p^k [d-1,k],
  // saturating on overflow.
  const std::uint64_t sat = UINT64_MAX;
  auto sat_add = [&](std::uint64_t a, std::uint64_t b) {
    return a > sat - b ? sat : a + b;
  };
  auto sat_mul = [&](std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return std::uint64_t{0};
    return a > sat / b ? sat : a * b;
  };
  std::vector<std::vector<std::uint64_t>> g(d + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::uint32_t n = 0; n <= d; ++n) g[n][0] = 1;
  for (std::uint32_t n = 1; n <= d; ++n)
    for (std::uint32_t m = 1; m <= std::min(n, k); ++m) {
      std::uint64_t pk = 1;
      for (std::uint32_t i = 0; i < m; ++i) pk = sat_mul(pk, params.p());
      g[n][m] = sat_add(g[n - 1][m - 1], sat_mul(pk, g[n - 1][m]));
    }
  return g[d][k];
}

SubspaceEnumerator::SubspaceEnumerator(GroupParams params, std::uint32_t k, std::uint64_t limit)
    : params_(params), k_(k), total_(subspace_count(params, k)) {
  if (k > params.d())
    throw std::invalid_argument("SubspaceEnumerator: dimension exceeds rank");
  if (total_ > limit)
    throw feasibility_error("subspace enumeration would produce " + std::to_string(total_) +
                            " subspaces, exceeding limit " + std::to_string(limit));
  pivots_.resize(k_);
  for (std::uint32_t i = 0; i < k_; ++i) pivots_[i] = i;
  rebuild_free_cells();
}

void SubspaceEnumerator::rebuild_free_cells() {
  free_cells_.clear();
  std::vector<bool> is_pivot(params_.d(), false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::uint32_t row = 0; row < k_; ++row)
    for (std::uint32_t col = pivots_[row] + 1; col < params_.d(); ++col)
      if (!is_pivot[col]) free_cells_.emplace_back(row, col);
  values_.assign(free_cells_.size(), 0);
}

bool SubspaceEnumerator::advance() {
  // Odometer over free entries, last cell fastest.
  for (std::size_t i = values_.size(); i-- > 0;) {
    if (++values_[i] < params_.p()) return true;
    values_[i] = 0;
  }
  // Next pivot-column combination in lexicographic order.
  const std::uint32_t d = params_.d();
  std::int64_t i = static_cast<std::int64_t>(k_) - 1;
  while (i >= 0 && pivots_[i] == d - k_ + i) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (std::size_t j = i + 1; j < k_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  rebuild_free_cells();
  return true;
}

std::optional<Subspace> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<GroupVector> basis;
  basis.reserve(k_);
  std::vector<std::vector<Residue>> rows(k_, std::vector<Residue>(params_.d(), 0));
  for (std::uint32_t i = 0; i < k_; ++i) rows[i][pivots_[i]] = 1;
  for (std::size_t c = 0; c < free_cells_.size(); ++c)
    rows[free_cells_[c].first][free_cells_[c].second] = values_[c];
  for (auto& r : rows) basis.emplace_back(params_, std::move(r));
  Subspace result(params_, std::move(basis));
  if (k_ == 0) {
    done_ = true;  // single zero subspace
  } else if (!advance()) {
    done_ = true;
  }
  return result;
}

std::vector<Subspace> enumerate_subspaces(GroupParams params, std::uint32_t k,
                                          std::uint64_t limit) {
  SubspaceEnumerator en(params, k, limit);
  std::vector<Subspace> out;
  out.reserve(en.total());
  while (auto s = en.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace fuglede
