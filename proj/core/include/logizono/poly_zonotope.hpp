#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "logizono/binvec.hpp"
#include "logizono/explicit_set.hpp"
#include "logizono/limits.hpp"

namespace logizono {

/// Identifier of a dependent factor. Equal identifiers denote the same
/// factor everywhere in the process.
using FactorId = std::uint64_t;

/// Hands out batches of never-before-seen factor identifiers.
///
/// Thread-safe. Identifiers supplied explicitly when constructing a
/// zonotope are reserved, so later batches never collide with them.
class IdAllocator {
 public:
  std::vector<FactorId> allocate(std::size_t count);
  /// Ensures every future allocation is greater than `id`.
  void reserve_through(FactorId id) noexcept;
  FactorId peek_next() const noexcept { return next_.load(std::memory_order_relaxed); }

  static IdAllocator& global() noexcept;

 private:
  std::atomic<FactorId> next_{1};
};

/// `count` fresh, strictly increasing identifiers from the global allocator.
std::vector<FactorId> unique_id(std::size_t count);

/// A polynomial logical zonotope <c, G, E, id>:
///
///   { c ^ XOR_i ( AND_k alpha_k^E(k,i) ) g_i : alpha in {0,1}^p }
///
/// with alpha^0 = 1, so a zero exponent column makes its generator
/// unconditional. Factor k is identified by id[k]; two zonotopes sharing
/// an identifier share that factor.
class PolyLogicalZonotope {
 public:
  PolyLogicalZonotope(BinaryVector center, BinaryMatrix generators, BinaryMatrix exponents,
                      std::vector<FactorId> ids);
  /// The singleton { center }.
  explicit PolyLogicalZonotope(BinaryVector center);

  std::size_t dim() const noexcept { return center_.dim(); }
  const BinaryVector& center() const noexcept { return center_; }
  const BinaryMatrix& generators() const noexcept { return generators_; }
  const BinaryMatrix& exponents() const noexcept { return exponents_; }
  const std::vector<FactorId>& ids() const noexcept { return ids_; }
  std::size_t generator_count() const noexcept { return generators_.cols(); }
  std::size_t factor_count() const noexcept { return ids_.size(); }

  friend bool operator==(const PolyLogicalZonotope&, const PolyLogicalZonotope&) = default;

 private:
  BinaryVector center_;
  BinaryMatrix generators_;
  BinaryMatrix exponents_;
  std::vector<FactorId> ids_;
};

/// Rewrites both operands over the common identifier vector
/// [a.ids, ids of b not in a], zero-filling exponent rows of foreign factors.
std::pair<PolyLogicalZonotope, PolyLogicalZonotope> merge_id(const PolyLogicalZonotope& a,
                                                             const PolyLogicalZonotope& b);

// Minkowski operations: operands are treated as independent sets and the
// result gets fresh identifiers. All are exact.
PolyLogicalZonotope pz_mink_xor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_mink_and(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_mink_xnor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_mink_nand(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_mink_or(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_mink_nor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_mink_apply(Gate gate, const PolyLogicalZonotope& a,
                                  const PolyLogicalZonotope& b);

/// Complements the center; G, E and id are kept, so NOT is both a
/// Minkowski and an exact operation.
PolyLogicalZonotope pz_not(const PolyLogicalZonotope& a);

// Exact operations: merge_id first, then combine per assignment of the
// shared factors. No new identifiers are allocated.
PolyLogicalZonotope pz_exact_xor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_exact_and(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_exact_xnor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_exact_nand(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_exact_or(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_exact_nor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b);
PolyLogicalZonotope pz_exact_apply(Gate gate, const PolyLogicalZonotope& a,
                                   const PolyLogicalZonotope& b);

/// pz_compact(pz_exact_apply(gate, a, b)) computed without materializing
/// the uncompacted cross terms. Same value for every assignment.
PolyLogicalZonotope pz_exact_apply_compact(Gate gate, const PolyLogicalZonotope& a,
                                           const PolyLogicalZonotope& b);

/// Contains every input point: c = s_1, g_{i-1} = s_i ^ s_1, E = I, fresh ids.
/// May contain extra points (XOR combinations) when more than two points
/// are given.
PolyLogicalZonotope pz_enclose_points(std::span<const BinaryVector> points);

/// Represents exactly the given points: ceil(log2 m) fresh factors, with
/// generators and exponents read off the algebraic normal form of an
/// assignment-to-point table.
PolyLogicalZonotope pz_encode_points(std::span<const BinaryVector> points);

/// The point selected by one assignment; `alpha` is indexed like ids().
BinaryVector pz_eval_at(const PolyLogicalZonotope& a, const BinaryVector& alpha);

/// All points, enumerating 2^p assignments. CapacityError above the cap.
ExplicitSet pz_evaluate(const PolyLogicalZonotope& a, const Limits& limits = Limits::from_env());

/// Concatenation of `parts` enumerated jointly over the union of their
/// identifiers, so shared factors take one value per assignment.
ExplicitSet pz_joint_evaluate(std::span<const PolyLogicalZonotope> parts,
                              const Limits& limits = Limits::from_env());

/// Identifiers appearing in any part, in first-seen order.
std::vector<FactorId> pz_union_ids(std::span<const PolyLogicalZonotope> parts);

bool pz_contains(const PolyLogicalZonotope& a, const BinaryVector& point,
                 const Limits& limits = Limits::from_env());

/// Greedy generator removal: a generator is dropped when the set without
/// it is unchanged, then unused factors are dropped. Preserves the set.
PolyLogicalZonotope pz_simplify(const PolyLogicalZonotope& a,
                                const Limits& limits = Limits::from_env());

/// Cheap reduction that preserves the point for every assignment: folds
/// generators with an all-zero exponent column into the center, XOR-merges
/// generators with identical exponent columns, drops zero generators and
/// drops factors no generator uses.
PolyLogicalZonotope pz_compact(const PolyLogicalZonotope& a);

/// Same set and dependency structure, with every identifier replaced by a
/// fresh one.
PolyLogicalZonotope pz_fresh_copy(const PolyLogicalZonotope& a);

}  // namespace logizono
