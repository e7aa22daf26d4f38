#pragma once

#include <cstddef>
#include <span>

#include "logizono/binvec.hpp"
#include "logizono/explicit_set.hpp"
#include "logizono/limits.hpp"

namespace logizono {

/// A logical zonotope <c, G>: the set { c ^ XOR_i beta_i g_i : beta in {0,1}^gamma }.
///
/// Generators are independent; every occurrence of a zonotope in an
/// expression is treated as a fresh set. An empty generator matrix is a
/// singleton.
class LogicalZonotope {
 public:
  LogicalZonotope(BinaryVector center, BinaryMatrix generators);
  explicit LogicalZonotope(BinaryVector center);

  std::size_t dim() const noexcept { return center_.dim(); }
  const BinaryVector& center() const noexcept { return center_; }
  const BinaryMatrix& generators() const noexcept { return generators_; }
  std::size_t generator_count() const noexcept { return generators_.cols(); }

  friend bool operator==(const LogicalZonotope&, const LogicalZonotope&) = default;

 private:
  BinaryVector center_;
  BinaryMatrix generators_;
};

// Exact Minkowski operations.
LogicalZonotope lz_xor(const LogicalZonotope& a, const LogicalZonotope& b);
LogicalZonotope lz_not(const LogicalZonotope& a);
LogicalZonotope lz_xnor(const LogicalZonotope& a, const LogicalZonotope& b);

// Over-approximating Minkowski operations: the result contains every
// pointwise image and has gamma_a + gamma_b + gamma_a * gamma_b generators.
LogicalZonotope lz_and(const LogicalZonotope& a, const LogicalZonotope& b);
LogicalZonotope lz_nand(const LogicalZonotope& a, const LogicalZonotope& b);
LogicalZonotope lz_or(const LogicalZonotope& a, const LogicalZonotope& b);
LogicalZonotope lz_nor(const LogicalZonotope& a, const LogicalZonotope& b);

/// Dispatches on `gate`; `Gate::Not` ignores `b`.
LogicalZonotope lz_apply(Gate gate, const LogicalZonotope& a, const LogicalZonotope& b);

/// c = s_1, g_{i-1} = s_i ^ s_1. Throws std::invalid_argument on an empty
/// list and DimensionError on mixed dimensions.
LogicalZonotope lz_enclose_points(std::span<const BinaryVector> points);

/// All points of the set. Throws CapacityError when the number of
/// independent generators exceeds `limits.max_factors`.
ExplicitSet lz_evaluate(const LogicalZonotope& a, const Limits& limits = Limits::from_env());

/// Number of points, 2^rank(G).
std::size_t lz_size(const LogicalZonotope& a);

/// Membership test: point ^ c lies in the GF(2) span of the generators.
bool lz_contains(const LogicalZonotope& a, const BinaryVector& point);

/// Drops zero generators and collapses duplicates; the set is unchanged.
LogicalZonotope lz_compact(const LogicalZonotope& a);

}  // namespace logizono
