#include "logizono/poly_zonotope.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "logizono/errors.hpp"

namespace logizono {

namespace {

using Word = BinaryVector::Word;

void require_same_dim(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

void require_enumerable(std::size_t factors, const Limits& limits, const char* what) {
  if (factors > limits.max_factors || factors > kMaxEnumerableFactors) {
    throw CapacityError(std::string(what) + ": " + std::to_string(factors) +
                        " dependent factors; enumeration cap is " +
                        std::to_string(std::min(limits.max_factors, kMaxEnumerableFactors)));
  }
}

// Point table indexed by assignment mask, stored as packed words.
//
// A generator with exponent mask m contributes to every assignment that is
// a superset of m, so the table is the subset-sum (zeta) transform of the
// coefficient table.
struct PointTable {
  std::size_t dim = 0;
  std::size_t words = 0;
  std::size_t factors = 0;
  std::vector<Word> data;

  std::span<const Word> at(std::uint64_t alpha) const {
    return {data.data() + alpha * words, words};
  }
};

struct Term {
  std::uint64_t mask;
  const BinaryVector* generator;
  std::size_t offset;
};

PointTable build_table(std::size_t dim, std::size_t factors, const BinaryVector& center,
                       std::span<const Term> terms) {
  PointTable t;
  t.dim = dim;
  t.words = (dim + BinaryVector::kWordBits - 1) / BinaryVector::kWordBits;
  t.factors = factors;
  const std::uint64_t n = std::uint64_t{1} << factors;
  t.data.assign(static_cast<std::size_t>(n) * t.words, 0);
  if (t.words == 0) return t;

  auto add_shifted = [&](Word* dst, const BinaryVector& v, std::size_t offset) {
    const auto src = v.words();
    const std::size_t shift = offset % BinaryVector::kWordBits;
    const std::size_t first = offset / BinaryVector::kWordBits;
    for (std::size_t w = 0; w < src.size(); ++w) {
      dst[first + w] ^= src[w] << shift;
      if (shift != 0 && first + w + 1 < t.words) {
        dst[first + w + 1] ^= src[w] >> (BinaryVector::kWordBits - shift);
      }
    }
  };

  add_shifted(t.data.data(), center, 0);
  for (const auto& term : terms) {
    add_shifted(t.data.data() + term.mask * t.words, *term.generator, term.offset);
  }
  for (std::size_t b = 0; b < factors; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (!(i & bit)) continue;
      Word* dst = t.data.data() + i * t.words;
      const Word* src = t.data.data() + (i ^ bit) * t.words;
      for (std::size_t w = 0; w < t.words; ++w) dst[w] ^= src[w];
    }
  }
  return t;
}

std::uint64_t column_mask(const BinaryVector& column, std::span<const std::size_t> position) {
  std::uint64_t mask = 0;
  for (std::size_t k = column.find_first(); k < column.dim(); ++k) {
    if (column.test(k)) mask |= std::uint64_t{1} << position[k];
  }
  return mask;
}

PointTable joint_table(std::span<const PolyLogicalZonotope> parts, const Limits& limits) {
  const auto ids = pz_union_ids(parts);
  require_enumerable(ids.size(), limits, "pz_evaluate");
  std::unordered_map<FactorId, std::size_t> index;
  for (std::size_t k = 0; k < ids.size(); ++k) index.emplace(ids[k], k);

  std::size_t dim = 0;
  for (const auto& p : parts) dim += p.dim();
  BinaryVector center(dim);
  std::vector<Term> terms;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    center.xor_at(offset, p.center());
    std::vector<std::size_t> position(p.factor_count());
    for (std::size_t k = 0; k < position.size(); ++k) position[k] = index.at(p.ids()[k]);
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      terms.push_back({column_mask(p.exponents().column(i), position),
                       &p.generators().column(i), offset});
    }
    offset += p.dim();
  }
  return build_table(dim, ids.size(), center, terms);
}

ExplicitSet table_points(const PointTable& t) {
  const std::uint64_t n = std::uint64_t{1} << t.factors;
  std::vector<BinaryVector> points;
  points.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) points.push_back(BinaryVector::from_words(t.at(i), t.dim));
  return ExplicitSet(t.dim, std::move(points));
}

// Keeps only the factors some generator uses.
PolyLogicalZonotope drop_unused_factors(BinaryVector center, BinaryMatrix g, BinaryMatrix e,
                                        const std::vector<FactorId>& ids) {
  BinaryVector used(ids.size());
  for (const auto& col : e.columns()) used |= col;
  std::vector<std::size_t> keep;
  std::vector<FactorId> kept_ids;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (used.test(k)) {
      keep.push_back(k);
      kept_ids.push_back(ids[k]);
    }
  }
  if (keep.size() == ids.size()) {
    return PolyLogicalZonotope(std::move(center), std::move(g), std::move(e), ids);
  }
  return PolyLogicalZonotope(std::move(center), std::move(g), e.select_rows(keep),
                             std::move(kept_ids));
}

}  // namespace

std::vector<FactorId> IdAllocator::allocate(std::size_t count) {
  const FactorId first = next_.fetch_add(count, std::memory_order_relaxed);
  std::vector<FactorId> ids(count);
  for (std::size_t i = 0; i < count; ++i) ids[i] = first + i;
  return ids;
}

void IdAllocator::reserve_through(FactorId id) noexcept {
  FactorId current = next_.load(std::memory_order_relaxed);
  while (current <= id &&
         !next_.compare_exchange_weak(current, id + 1, std::memory_order_relaxed)) {
  }
}

IdAllocator& IdAllocator::global() noexcept {
  static IdAllocator allocator;
  return allocator;
}

std::vector<FactorId> unique_id(std::size_t count) {
  return IdAllocator::global().allocate(count);
}

PolyLogicalZonotope::PolyLogicalZonotope(BinaryVector center, BinaryMatrix generators,
                                         BinaryMatrix exponents, std::vector<FactorId> ids)
    : center_(std::move(center)),
      generators_(std::move(generators)),
      exponents_(std::move(exponents)),
      ids_(std::move(ids)) {
  if (generators_.empty() && generators_.rows() != center_.dim()) {
    generators_ = BinaryMatrix(center_.dim());
  }
  if (exponents_.empty() && exponents_.rows() != ids_.size()) {
    exponents_ = BinaryMatrix(ids_.size());
  }
  if (generators_.rows() != center_.dim()) {
    throw DimensionError("generators have " + std::to_string(generators_.rows()) +
                         " rows, center has " + std::to_string(center_.dim()));
  }
  if (exponents_.cols() != generators_.cols()) {
    throw DimensionError("exponent matrix has " + std::to_string(exponents_.cols()) +
                         " columns for " + std::to_string(generators_.cols()) + " generators");
  }
  if (exponents_.rows() != ids_.size()) {
    throw DimensionError("exponent matrix has " + std::to_string(exponents_.rows()) +
                         " rows for " + std::to_string(ids_.size()) + " identifiers");
  }
  std::unordered_set<FactorId> seen;
  FactorId max_id = 0;
  for (auto id : ids_) {
    if (!seen.insert(id).second) {
      throw std::invalid_argument("duplicate factor identifier " + std::to_string(id));
    }
    max_id = std::max(max_id, id);
  }
  if (!ids_.empty()) IdAllocator::global().reserve_through(max_id);
}

PolyLogicalZonotope::PolyLogicalZonotope(BinaryVector center)
    : center_(std::move(center)), generators_(center_.dim()), exponents_(0) {}

std::pair<PolyLogicalZonotope, PolyLogicalZonotope> merge_id(const PolyLogicalZonotope& a,
                                                             const PolyLogicalZonotope& b) {
  std::vector<FactorId> ids = a.ids();
  std::unordered_map<FactorId, std::size_t> index;
  for (std::size_t k = 0; k < ids.size(); ++k) index.emplace(ids[k], k);
  for (auto id : b.ids()) {
    if (index.emplace(id, ids.size()).second) ids.push_back(id);
  }

  std::vector<std::optional<std::size_t>> from_a(ids.size());
  for (std::size_t k = 0; k < a.factor_count(); ++k) from_a[k] = k;
  std::vector<std::optional<std::size_t>> from_b(ids.size());
  for (std::size_t k = 0; k < b.factor_count(); ++k) from_b[index.at(b.ids()[k])] = k;

  return {PolyLogicalZonotope(a.center(), a.generators(), a.exponents().gather_rows(from_a), ids),
          PolyLogicalZonotope(b.center(), b.generators(), b.exponents().gather_rows(from_b), ids)};
}

PolyLogicalZonotope pz_fresh_copy(const PolyLogicalZonotope& a) {
  return PolyLogicalZonotope(a.center(), a.generators(), a.exponents(),
                             unique_id(a.factor_count()));
}

PolyLogicalZonotope pz_not(const PolyLogicalZonotope& a) {
  return PolyLogicalZonotope(bv_not(a.center()), a.generators(), a.exponents(), a.ids());
}

PolyLogicalZonotope pz_exact_xor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  require_same_dim(a, b, "pz_exact_xor");
  auto [ma, mb] = merge_id(a, b);
  BinaryMatrix g(a.dim());
  BinaryMatrix e(ma.factor_count());
  g.reserve(ma.generator_count() + mb.generator_count());
  e.reserve(ma.generator_count() + mb.generator_count());
  for (std::size_t i = 0; i < ma.generator_count(); ++i) {
    g.push_back(ma.generators().column(i));
    e.push_back(ma.exponents().column(i));
  }
  for (std::size_t j = 0; j < mb.generator_count(); ++j) {
    g.push_back(mb.generators().column(j));
    e.push_back(mb.exponents().column(j));
  }
  return PolyLogicalZonotope(ma.center() ^ mb.center(), std::move(g), std::move(e), ma.ids());
}

PolyLogicalZonotope pz_exact_and(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  require_same_dim(a, b, "pz_exact_and");
  auto [ma, mb] = merge_id(a, b);
  const auto& c1 = ma.center();
  const auto& c2 = mb.center();
  const auto& g1 = ma.generators();
  const auto& g2 = mb.generators();
  const auto& e1 = ma.exponents();
  const auto& e2 = mb.exponents();
  const std::size_t total = g2.cols() + g1.cols() + g1.cols() * g2.cols();
  BinaryMatrix g(a.dim());
  BinaryMatrix e(ma.factor_count());
  g.reserve(total);
  e.reserve(total);
  for (std::size_t j = 0; j < g2.cols(); ++j) {
    g.push_back(c1 & g2.column(j));
    e.push_back(e2.column(j));
  }
  for (std::size_t i = 0; i < g1.cols(); ++i) {
    g.push_back(c2 & g1.column(i));
    e.push_back(e1.column(i));
  }
  for (std::size_t i = 0; i < g1.cols(); ++i) {
    for (std::size_t j = 0; j < g2.cols(); ++j) {
      g.push_back(g1.column(i) & g2.column(j));
      e.push_back(e1.column(i) | e2.column(j));
    }
  }
  return PolyLogicalZonotope(c1 & c2, std::move(g), std::move(e), ma.ids());
}

PolyLogicalZonotope pz_exact_xnor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  return pz_not(pz_exact_xor(a, b));
}

PolyLogicalZonotope pz_exact_nand(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  return pz_not(pz_exact_and(a, b));
}

PolyLogicalZonotope pz_exact_or(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  return pz_exact_nand(pz_not(a), pz_not(b));
}

PolyLogicalZonotope pz_exact_nor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  return pz_not(pz_exact_or(a, b));
}

PolyLogicalZonotope pz_exact_apply(Gate gate, const PolyLogicalZonotope& a,
                                   const PolyLogicalZonotope& b) {
  switch (gate) {
    case Gate::Xor: return pz_exact_xor(a, b);
    case Gate::And: return pz_exact_and(a, b);
    case Gate::Or: return pz_exact_or(a, b);
    case Gate::Xnor: return pz_exact_xnor(a, b);
    case Gate::Nand: return pz_exact_nand(a, b);
    case Gate::Nor: return pz_exact_nor(a, b);
    case Gate::Not: return pz_not(a);
  }
  throw std::invalid_argument("pz_exact_apply: unknown gate");
}

namespace {

// Polynomial keyed by monomial mask over at most 64 merged factors.
struct MaskPoly {
  BinaryVector center;
  std::unordered_map<std::uint64_t, BinaryVector> terms;

  void add(std::uint64_t mask, const BinaryVector& g) {
    if (g.none()) return;
    if (mask == 0) {
      center ^= g;
      return;
    }
    auto [it, inserted] = terms.try_emplace(mask, g);
    if (!inserted) it->second ^= g;
  }
};

std::vector<std::uint64_t> masks_of(const PolyLogicalZonotope& z) {
  std::vector<std::uint64_t> out;
  out.reserve(z.generator_count());
  for (const auto& col : z.exponents().columns()) {
    out.push_back(col.dim() == 0 ? 0 : col.words()[0]);
  }
  return out;
}

PolyLogicalZonotope to_zonotope(MaskPoly poly, const std::vector<FactorId>& ids) {
  std::vector<std::pair<std::uint64_t, BinaryVector>> sorted;
  sorted.reserve(poly.terms.size());
  for (auto& [mask, g] : poly.terms) {
    if (g.any()) sorted.emplace_back(mask, std::move(g));
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  BinaryMatrix g(poly.center.dim());
  BinaryMatrix e(ids.size());
  g.reserve(sorted.size());
  e.reserve(sorted.size());
  for (auto& [mask, gen] : sorted) {
    g.push_back(std::move(gen));
    e.push_back(BinaryVector::from_word(mask, ids.size()));
  }
  return drop_unused_factors(std::move(poly.center), std::move(g), std::move(e), ids);
}

MaskPoly fused_xor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  MaskPoly out{a.center() ^ b.center(), {}};
  const auto ma = masks_of(a);
  const auto mb = masks_of(b);
  for (std::size_t i = 0; i < ma.size(); ++i) out.add(ma[i], a.generators().column(i));
  for (std::size_t j = 0; j < mb.size(); ++j) out.add(mb[j], b.generators().column(j));
  return out;
}

MaskPoly fused_and(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  MaskPoly out{a.center() & b.center(), {}};
  const auto ma = masks_of(a);
  const auto mb = masks_of(b);
  out.terms.reserve(ma.size() + mb.size());
  for (std::size_t j = 0; j < mb.size(); ++j) out.add(mb[j], a.center() & b.generators().column(j));
  for (std::size_t i = 0; i < ma.size(); ++i) out.add(ma[i], b.center() & a.generators().column(i));
  BinaryVector scratch;
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const auto& gi = a.generators().column(i);
    for (std::size_t j = 0; j < mb.size(); ++j) {
      scratch = gi;
      scratch &= b.generators().column(j);
      out.add(ma[i] | mb[j], scratch);
    }
  }
  return out;
}

}  // namespace

PolyLogicalZonotope pz_exact_apply_compact(Gate gate, const PolyLogicalZonotope& a,
                                           const PolyLogicalZonotope& b) {
  if (gate == Gate::Not) return pz_compact(pz_not(a));
  require_same_dim(a, b, "pz_exact_apply_compact");
  auto [ma, mb] = merge_id(a, b);
  if (ma.factor_count() > 64) return pz_compact(pz_exact_apply(gate, a, b));
  const auto& ids = ma.ids();
  switch (gate) {
    case Gate::Xor: return to_zonotope(fused_xor(ma, mb), ids);
    case Gate::Xnor: return pz_not(to_zonotope(fused_xor(ma, mb), ids));
    case Gate::And: return to_zonotope(fused_and(ma, mb), ids);
    case Gate::Nand: return pz_not(to_zonotope(fused_and(ma, mb), ids));
    case Gate::Or: return pz_not(to_zonotope(fused_and(pz_not(ma), pz_not(mb)), ids));
    case Gate::Nor: return to_zonotope(fused_and(pz_not(ma), pz_not(mb)), ids);
    case Gate::Not: break;
  }
  throw std::invalid_argument("pz_exact_apply_compact: unknown gate");
}

// With disjoint identifiers merge_id stacks the exponent rows, which yields
// the block layouts of the Minkowski constructions directly.
PolyLogicalZonotope pz_mink_xor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  require_same_dim(a, b, "pz_mink_xor");
  return pz_exact_xor(pz_fresh_copy(a), pz_fresh_copy(b));
}

PolyLogicalZonotope pz_mink_and(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  require_same_dim(a, b, "pz_mink_and");
  return pz_exact_and(pz_fresh_copy(a), pz_fresh_copy(b));
}

PolyLogicalZonotope pz_mink_xnor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  return pz_not(pz_mink_xor(a, b));
}

PolyLogicalZonotope pz_mink_nand(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  return pz_not(pz_mink_and(a, b));
}

PolyLogicalZonotope pz_mink_or(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  return pz_mink_nand(pz_not(a), pz_not(b));
}

PolyLogicalZonotope pz_mink_nor(const PolyLogicalZonotope& a, const PolyLogicalZonotope& b) {
  return pz_not(pz_mink_or(a, b));
}

PolyLogicalZonotope pz_mink_apply(Gate gate, const PolyLogicalZonotope& a,
                                  const PolyLogicalZonotope& b) {
  switch (gate) {
    case Gate::Xor: return pz_mink_xor(a, b);
    case Gate::And: return pz_mink_and(a, b);
    case Gate::Or: return pz_mink_or(a, b);
    case Gate::Xnor: return pz_mink_xnor(a, b);
    case Gate::Nand: return pz_mink_nand(a, b);
    case Gate::Nor: return pz_mink_nor(a, b);
    case Gate::Not: return pz_not(a);
  }
  throw std::invalid_argument("pz_mink_apply: unknown gate");
}

PolyLogicalZonotope pz_enclose_points(std::span<const BinaryVector> points) {
  if (points.empty()) throw std::invalid_argument("pz_enclose_points: no points");
  const auto& c = points.front();
  const std::size_t h = points.size() - 1;
  BinaryMatrix g(c.dim());
  g.reserve(h);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != c.dim()) throw DimensionError("pz_enclose_points: mixed dimensions");
    g.push_back(points[i] ^ c);
  }
  return PolyLogicalZonotope(c, std::move(g), BinaryMatrix::identity(h), unique_id(h));
}

PolyLogicalZonotope pz_encode_points(std::span<const BinaryVector> points) {
  if (points.empty()) throw std::invalid_argument("pz_encode_points: no points");
  const std::size_t dim = points.front().dim();
  for (const auto& p : points) {
    if (p.dim() != dim) throw DimensionError("pz_encode_points: mixed dimensions");
  }
  // Duplicates would only cost factors.
  std::vector<BinaryVector> distinct;
  std::unordered_set<BinaryVector> seen;
  for (const auto& p : points) {
    if (seen.insert(p).second) distinct.push_back(p);
  }
  const std::size_t m = distinct.size();
  const std::size_t q = m <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(m - 1));
  if (q > kMaxEnumerableFactors) throw CapacityError("pz_encode_points: too many points");
  const std::size_t n = std::size_t{1} << q;

  // Assignment i selects point i, padding repeats the last point. The
  // Moebius transform turns the table into ANF coefficients.
  std::vector<BinaryVector> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = distinct[std::min(i, m - 1)];
  for (std::size_t b = 0; b < q; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t i = 0; i < n; ++i) {
      if (i & bit) f[i] ^= f[i ^ bit];
    }
  }

  BinaryMatrix g(dim);
  BinaryMatrix e(q);
  for (std::size_t i = 1; i < n; ++i) {
    if (f[i].none()) continue;
    g.push_back(std::move(f[i]));
    e.push_back(BinaryVector::from_word(i, q));
  }
  return drop_unused_factors(std::move(f[0]), std::move(g), std::move(e), unique_id(q));
}

BinaryVector pz_eval_at(const PolyLogicalZonotope& a, const BinaryVector& alpha) {
  if (alpha.dim() != a.factor_count()) {
    throw DimensionError("pz_eval_at: assignment has " + std::to_string(alpha.dim()) +
                         " entries for " + std::to_string(a.factor_count()) + " factors");
  }
  BinaryVector x = a.center();
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    const auto& col = a.exponents().column(i);
    if ((col & alpha) == col) x ^= a.generators().column(i);
  }
  return x;
}

std::vector<FactorId> pz_union_ids(std::span<const PolyLogicalZonotope> parts) {
  std::vector<FactorId> ids;
  std::unordered_set<FactorId> seen;
  for (const auto& p : parts) {
    for (auto id : p.ids()) {
      if (seen.insert(id).second) ids.push_back(id);
    }
  }
  return ids;
}

ExplicitSet pz_evaluate(const PolyLogicalZonotope& a, const Limits& limits) {
  return table_points(joint_table(std::span(&a, 1), limits));
}

ExplicitSet pz_joint_evaluate(std::span<const PolyLogicalZonotope> parts, const Limits& limits) {
  return table_points(joint_table(parts, limits));
}

bool pz_contains(const PolyLogicalZonotope& a, const BinaryVector& point, const Limits& limits) {
  if (point.dim() != a.dim()) throw DimensionError("pz_contains: dimension mismatch");
  const auto t = joint_table(std::span(&a, 1), limits);
  const auto target = point.words();
  const std::uint64_t n = std::uint64_t{1} << t.factors;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (std::equal(target.begin(), target.end(), t.at(i).begin())) return true;
  }
  return false;
}

PolyLogicalZonotope pz_simplify(const PolyLogicalZonotope& a, const Limits& limits) {
  const auto target = pz_evaluate(a, limits);
  PolyLogicalZonotope current = a;
  std::size_t i = 0;
  while (i < current.generator_count()) {
    BinaryMatrix g = current.generators();
    BinaryMatrix e = current.exponents();
    g.erase_column(i);
    e.erase_column(i);
    PolyLogicalZonotope candidate(current.center(), std::move(g), std::move(e), current.ids());
    if (pz_evaluate(candidate, limits) == target) {
      current = std::move(candidate);
    } else {
      ++i;
    }
  }
  return drop_unused_factors(current.center(), current.generators(), current.exponents(),
                             current.ids());
}

PolyLogicalZonotope pz_compact(const PolyLogicalZonotope& a) {
  BinaryVector center = a.center();
  std::vector<BinaryVector> merged;
  std::vector<BinaryVector> exps;
  std::unordered_map<BinaryVector, std::size_t> slot;
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    const auto& col = a.exponents().column(i);
    const auto& gen = a.generators().column(i);
    if (col.none()) {
      center ^= gen;
      continue;
    }
    auto [it, inserted] = slot.emplace(col, merged.size());
    if (inserted) {
      merged.push_back(gen);
      exps.push_back(col);
    } else {
      merged[it->second] ^= gen;
    }
  }
  BinaryMatrix g(a.dim());
  BinaryMatrix e(a.factor_count());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (merged[i].none()) continue;
    g.push_back(std::move(merged[i]));
    e.push_back(std::move(exps[i]));
  }
  return drop_unused_factors(std::move(center), std::move(g), std::move(e), a.ids());
}

}  // namespace logizono
