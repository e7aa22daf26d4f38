#pragma once

#include <cstddef>
#include <vector>

#include "logizono/binvec.hpp"

namespace logizono::detail {

/// Incrementally built, fully reduced GF(2) basis.
///
/// Every stored vector has a pivot (its lowest set bit) and no stored
/// vector has a set bit at another vector's pivot.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t dim) : dim_(dim) {}

  /// Reduces `v` against the basis in place.
  void reduce(BinaryVector& v) const {
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (v.test(pivots_[i])) v ^= vectors_[i];
    }
  }

  /// Adds `v` if it is independent of the basis; returns whether it was.
  bool insert(BinaryVector v) {
    reduce(v);
    const std::size_t pivot = v.find_first();
    if (pivot == v.dim()) return false;
    for (auto& b : vectors_) {
      if (b.test(pivot)) b ^= v;
    }
    vectors_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  bool in_span(BinaryVector v) const {
    reduce(v);
    return v.none();
  }

  std::size_t rank() const noexcept { return vectors_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<BinaryVector>& vectors() const noexcept { return vectors_; }

 private:
  std::size_t dim_;
  std::vector<BinaryVector> vectors_;
  std::vector<std::size_t> pivots_;
};

}  // namespace logizono::detail
