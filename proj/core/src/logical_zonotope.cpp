#include "logizono/logical_zonotope.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "gf2.hpp"
#include "logizono/errors.hpp"

namespace logizono {

namespace {

void require_same_dim(const LogicalZonotope& a, const LogicalZonotope& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

detail::Gf2Basis span_of(const LogicalZonotope& a) {
  detail::Gf2Basis basis(a.dim());
  for (const auto& g : a.generators().columns()) basis.insert(g);
  return basis;
}

}  // namespace

LogicalZonotope::LogicalZonotope(BinaryVector center, BinaryMatrix generators)
    : center_(std::move(center)), generators_(std::move(generators)) {
  if (generators_.rows() != center_.dim()) {
    if (generators_.empty()) {
      generators_ = BinaryMatrix(center_.dim());
    } else {
      throw DimensionError("logical zonotope generators have " +
                           std::to_string(generators_.rows()) + " rows, center has " +
                           std::to_string(center_.dim()));
    }
  }
}

LogicalZonotope::LogicalZonotope(BinaryVector center)
    : center_(std::move(center)), generators_(center_.dim()) {}

LogicalZonotope lz_xor(const LogicalZonotope& a, const LogicalZonotope& b) {
  require_same_dim(a, b, "lz_xor");
  BinaryMatrix g(a.dim());
  g.reserve(a.generator_count() + b.generator_count());
  for (const auto& col : a.generators().columns()) g.push_back(col);
  for (const auto& col : b.generators().columns()) g.push_back(col);
  return LogicalZonotope(a.center() ^ b.center(), std::move(g));
}

LogicalZonotope lz_not(const LogicalZonotope& a) {
  return LogicalZonotope(bv_not(a.center()), a.generators());
}

LogicalZonotope lz_xnor(const LogicalZonotope& a, const LogicalZonotope& b) {
  return lz_not(lz_xor(a, b));
}

LogicalZonotope lz_and(const LogicalZonotope& a, const LogicalZonotope& b) {
  require_same_dim(a, b, "lz_and");
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  BinaryMatrix g(a.dim());
  g.reserve(gb.cols() + ga.cols() + ga.cols() * gb.cols());
  for (const auto& col : gb.columns()) g.push_back(a.center() & col);
  for (const auto& col : ga.columns()) g.push_back(b.center() & col);
  for (const auto& ca : ga.columns()) {
    for (const auto& cb : gb.columns()) g.push_back(ca & cb);
  }
  return LogicalZonotope(a.center() & b.center(), std::move(g));
}

LogicalZonotope lz_nand(const LogicalZonotope& a, const LogicalZonotope& b) {
  return lz_not(lz_and(a, b));
}

LogicalZonotope lz_or(const LogicalZonotope& a, const LogicalZonotope& b) {
  return lz_nand(lz_not(a), lz_not(b));
}

LogicalZonotope lz_nor(const LogicalZonotope& a, const LogicalZonotope& b) {
  return lz_not(lz_or(a, b));
}

LogicalZonotope lz_apply(Gate gate, const LogicalZonotope& a, const LogicalZonotope& b) {
  switch (gate) {
    case Gate::Xor: return lz_xor(a, b);
    case Gate::And: return lz_and(a, b);
    case Gate::Or: return lz_or(a, b);
    case Gate::Xnor: return lz_xnor(a, b);
    case Gate::Nand: return lz_nand(a, b);
    case Gate::Nor: return lz_nor(a, b);
    case Gate::Not: return lz_not(a);
  }
  throw std::invalid_argument("lz_apply: unknown gate");
}

LogicalZonotope lz_enclose_points(std::span<const BinaryVector> points) {
  if (points.empty()) throw std::invalid_argument("lz_enclose_points: no points");
  const auto& c = points.front();
  BinaryMatrix g(c.dim());
  g.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != c.dim()) throw DimensionError("lz_enclose_points: mixed dimensions");
    g.push_back(points[i] ^ c);
  }
  return LogicalZonotope(c, std::move(g));
}

ExplicitSet lz_evaluate(const LogicalZonotope& a, const Limits& limits) {
  const auto basis = span_of(a);
  const std::size_t rank = basis.rank();
  if (rank > limits.max_factors || rank > kMaxEnumerableFactors) {
    throw CapacityError("logical zonotope has " + std::to_string(rank) +
                        " independent generators; enumeration cap is " +
                        std::to_string(limits.max_factors));
  }
  // Distinct basis combinations give distinct points, so a Gray-code walk
  // visits each point exactly once.
  std::vector<BinaryVector> points;
  points.reserve(std::size_t{1} << rank);
  BinaryVector x = a.center();
  points.push_back(x);
  const auto& vectors = basis.vectors();
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << rank); ++i) {
    x ^= vectors[static_cast<std::size_t>(std::countr_zero(i))];
    points.push_back(x);
  }
  return ExplicitSet(a.dim(), std::move(points));
}

std::size_t lz_size(const LogicalZonotope& a) {
  const std::size_t rank = span_of(a).rank();
  if (rank >= 64) throw CapacityError("lz_size: set size exceeds 2^63");
  return std::size_t{1} << rank;
}

bool lz_contains(const LogicalZonotope& a, const BinaryVector& point) {
  if (point.dim() != a.dim()) throw DimensionError("lz_contains: dimension mismatch");
  return span_of(a).in_span(point ^ a.center());
}

LogicalZonotope lz_compact(const LogicalZonotope& a) {
  BinaryMatrix g(a.dim());
  std::unordered_set<BinaryVector> seen;
  for (const auto& col : a.generators().columns()) {
    if (col.none()) continue;
    if (seen.insert(col).second) g.push_back(col);
  }
  return LogicalZonotope(a.center(), std::move(g));
}

}  // namespace logizono
