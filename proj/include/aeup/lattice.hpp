#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace aeup {

// Exact nonnegative counts (set sizes, energies).
using Count = std::uint64_t;

// Dense enumerations (transforms, full-group scans) are limited to N^d <= 2^24.
inline constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

// A point or frequency of Z_N^d. Coordinates are canonical residues in [0, N)
// when produced by GroupParams; the type itself does not know N.
class RingVector {
 public:
  RingVector() = default;
  explicit RingVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  std::span<const std::int64_t> coords() const { return coords_; }
  std::size_t dimension() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const RingVector&, const RingVector&) = default;
  friend auto operator<=>(const RingVector&, const RingVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

// The group Z_N^d. Points are addressed either as RingVector or by their
// row-major flat index (first coordinate most significant), which orders
// points lexicographically.
class GroupParams {
 public:
  GroupParams(std::int64_t modulus, int dimension);

  std::int64_t modulus() const { return modulus_; }
  int dimension() const { return dimension_; }
  // N^d.
  std::uint64_t size() const { return size_; }

  bool dense_ok() const { return size_ <= kDenseLimit; }
  // Throws CapacityError naming `what` when N^d exceeds the dense limit.
  void require_dense(std::string_view what) const;

  // Reduces arbitrary integer coordinates to canonical residues.
  RingVector point(std::span<const std::int64_t> coords) const;
  RingVector point(std::initializer_list<std::int64_t> coords) const;
  RingVector zero() const;
  bool is_canonical(const RingVector& v) const;

  RingVector add(const RingVector& a, const RingVector& b) const;
  RingVector sub(const RingVector& a, const RingVector& b) const;
  RingVector negate(const RingVector& a) const;
  RingVector scale(std::int64_t k, const RingVector& a) const;
  // m . x mod N, as a residue in [0, N).
  std::int64_t dot(const RingVector& m, const RingVector& x) const;

  std::uint64_t index_of(const RingVector& v) const;
  RingVector point_at(std::uint64_t index) const;

  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_index(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t negate_index(std::uint64_t a) const;
  std::int64_t dot_index(std::uint64_t m, std::uint64_t x) const;

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.modulus_ == b.modulus_ && a.dimension_ == b.dimension_;
  }

 private:
  std::int64_t modulus_;
  int dimension_;
  std::uint64_t size_;
};

// Finite subset of Z_N^d, kept sorted in lexicographic order without duplicates.
class SupportSet {
 public:
  explicit SupportSet(GroupParams params);
  // Points must be canonical for `params`; duplicates are merged.
  SupportSet(GroupParams params, std::span<const RingVector> points);
  SupportSet(GroupParams params, std::initializer_list<RingVector> points);

  static SupportSet from_indices(GroupParams params, std::vector<std::uint64_t> indices);

  const GroupParams& params() const { return params_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

  bool contains(const RingVector& v) const;
  bool contains_index(std::uint64_t index) const;

  std::span<const std::uint64_t> indices() const { return indices_; }
  RingVector point(std::size_t i) const { return params_.point_at(indices_[i]); }
  std::vector<RingVector> points() const;

  friend bool operator==(const SupportSet& a, const SupportSet& b) {
    return a.params_ == b.params_ && a.indices_ == b.indices_;
  }

 private:
  GroupParams params_;
  std::vector<std::uint64_t> indices_;
};

SupportSet full_group(const GroupParams& params);

// I^d with I = {0, ..., m-1}; requires 1 <= m < N.
SupportSet make_interval_grid(const GroupParams& params, std::int64_t m);

// {k g : k >= 0}.
SupportSet make_cyclic_subgroup(const GroupParams& params, const RingVector& generator);

// <g_1> x ... x <g_d>, one cyclic subgroup of Z_N per coordinate.
SupportSet make_product_subgroup(const GroupParams& params,
                                 std::span<const std::int64_t> generators);

SupportSet shift_set(const SupportSet& a, const RingVector& t);
SupportSet negate_set(const SupportSet& a);

bool is_subgroup(const SupportSet& h);

// H^perp = {m : m.x = 0 for all x in H}. Throws StructureError unless H is a subgroup.
SupportSet annihilator(const SupportSet& h);

}  // namespace aeup
