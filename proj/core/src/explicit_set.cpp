#include "logizono/explicit_set.hpp"

#include <algorithm>
#include <string>

#include "logizono/errors.hpp"

namespace logizono {

namespace {

void require_dim(std::size_t expected, const BinaryVector& p) {
  if (p.dim() != expected) {
    throw DimensionError("point of dimension " + std::to_string(p.dim()) +
                         " in a set of dimension " + std::to_string(expected));
  }
}

}  // namespace

ExplicitSet::ExplicitSet(std::size_t dim, std::vector<BinaryVector> points)
    : dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_) require_dim(dim_, p);
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

ExplicitSet ExplicitSet::from_strings(std::initializer_list<std::string_view> points) {
  std::vector<BinaryVector> pts;
  pts.reserve(points.size());
  for (auto p : points) pts.push_back(BinaryVector::from_string(p));
  const std::size_t dim = pts.empty() ? 0 : pts.front().dim();
  return ExplicitSet(dim, std::move(pts));
}

ExplicitSet ExplicitSet::singleton(BinaryVector point) {
  const auto dim = point.dim();
  return ExplicitSet(dim, {std::move(point)});
}

bool ExplicitSet::contains(const BinaryVector& point) const {
  return std::binary_search(points_.begin(), points_.end(), point);
}

bool ExplicitSet::is_subset_of(const ExplicitSet& other) const {
  if (dim_ != other.dim_) return false;
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(),
                       points_.end());
}

ExplicitSet set_minkowski(const ExplicitSet& a, const ExplicitSet& b, Gate gate) {
  if (a.dim() != b.dim()) {
    throw DimensionError("set_minkowski: dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
  std::vector<BinaryVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& z1 : a.points()) {
    for (const auto& z2 : b.points()) {
      out.push_back(gate == Gate::Not ? bv_not(z1) : bv_op(z1, z2, gate));
    }
  }
  return ExplicitSet(a.dim(), std::move(out));
}

ExplicitSet set_not(const ExplicitSet& a) {
  std::vector<BinaryVector> out;
  out.reserve(a.size());
  for (const auto& z : a.points()) out.push_back(bv_not(z));
  return ExplicitSet(a.dim(), std::move(out));
}

ExplicitSet set_union(const ExplicitSet& a, const ExplicitSet& b) {
  if (a.dim() != b.dim()) throw DimensionError("set_union: dimension mismatch");
  std::vector<BinaryVector> out(a.points().begin(), a.points().end());
  out.insert(out.end(), b.points().begin(), b.points().end());
  return ExplicitSet(a.dim(), std::move(out));
}

}  // namespace logizono
