#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "logizono/binvec.hpp"

namespace logizono {

/// A finite, deduplicated set of binary vectors of one dimension.
///
/// This is the brute-force reference every generator-space operation is
/// checked against. Points are kept sorted so two equal sets compare equal
/// and print identically.
class ExplicitSet {
 public:
  /// Empty set of the given dimension.
  explicit ExplicitSet(std::size_t dim) : dim_(dim) {}
  /// Deduplicates `points`; throws DimensionError if any point has a
  /// different dimension.
  ExplicitSet(std::size_t dim, std::vector<BinaryVector> points);

  static ExplicitSet from_strings(std::initializer_list<std::string_view> points);
  static ExplicitSet singleton(BinaryVector point);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::span<const BinaryVector> points() const noexcept { return points_; }

  bool contains(const BinaryVector& point) const;
  bool is_subset_of(const ExplicitSet& other) const;

  friend bool operator==(const ExplicitSet&, const ExplicitSet&) = default;

 private:
  std::size_t dim_;
  std::vector<BinaryVector> points_;
};

/// { gate(z1, z2) : z1 in a, z2 in b }.
ExplicitSet set_minkowski(const ExplicitSet& a, const ExplicitSet& b, Gate gate);
/// Pointwise complement.
ExplicitSet set_not(const ExplicitSet& a);
/// Set union; dimensions must agree.
ExplicitSet set_union(const ExplicitSet& a, const ExplicitSet& b);

}  // namespace logizono
