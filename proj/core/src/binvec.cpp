#include "logizono/binvec.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "logizono/errors.hpp"

namespace logizono {

namespace {

constexpr std::array<std::pair<Gate, std::string_view>, 7> kGateNames{{
    {Gate::Xor, "XOR"},
    {Gate::And, "AND"},
    {Gate::Or, "OR"},
    {Gate::Xnor, "XNOR"},
    {Gate::Nand, "NAND"},
    {Gate::Nor, "NOR"},
    {Gate::Not, "NOT"},
}};

std::size_t words_for(std::size_t dim) {
  return (dim + BinaryVector::kWordBits - 1) / BinaryVector::kWordBits;
}

}  // namespace

std::string_view gate_name(Gate gate) noexcept {
  for (const auto& [g, name] : kGateNames) {
    if (g == gate) return name;
  }
  return "?";
}

std::optional<Gate> gate_from_name(std::string_view name) noexcept {
  for (const auto& [g, n] : kGateNames) {
    if (std::equal(n.begin(), n.end(), name.begin(), name.end(), [](char a, char b) {
          return a == (b >= 'a' && b <= 'z' ? static_cast<char>(b - 'a' + 'A') : b);
        })) {
      return g;
    }
  }
  return std::nullopt;
}

bool apply_gate(Gate gate, bool lhs, bool rhs) noexcept {
  switch (gate) {
    case Gate::Xor: return lhs != rhs;
    case Gate::And: return lhs && rhs;
    case Gate::Or: return lhs || rhs;
    case Gate::Xnor: return lhs == rhs;
    case Gate::Nand: return !(lhs && rhs);
    case Gate::Nor: return !(lhs || rhs);
    case Gate::Not: return !lhs;
  }
  return false;
}

// --- BinaryVector ----------------------------------------------------------

BinaryVector::BinaryVector(std::size_t dim) : dim_(dim), words_(words_for(dim), 0) {}

BinaryVector BinaryVector::ones(std::size_t dim) {
  BinaryVector v(dim);
  std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
  v.clear_padding();
  return v;
}

BinaryVector BinaryVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("BinaryVector::unit: index out of range");
  BinaryVector v(dim);
  v.set(index);
  return v;
}

BinaryVector BinaryVector::from_string(std::string_view bits) {
  BinaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("invalid bitstring '" + std::string(bits) +
                                  "': expected only '0' and '1'");
    }
  }
  return v;
}

BinaryVector BinaryVector::from_bits(std::initializer_list<int> bits) {
  BinaryVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("from_bits: bits must be 0 or 1");
    v.set(i++, b == 1);
  }
  return v;
}

BinaryVector BinaryVector::from_word(Word value, std::size_t dim) {
  if (dim > kWordBits) throw std::invalid_argument("from_word: dim exceeds one word");
  BinaryVector v(dim);
  if (dim > 0) {
    v.words_[0] = value;
    v.clear_padding();
  }
  return v;
}

BinaryVector BinaryVector::from_words(std::span<const Word> words, std::size_t dim) {
  BinaryVector v(dim);
  if (words.size() < v.words_.size()) throw std::invalid_argument("from_words: too few words");
  std::copy_n(words.begin(), v.words_.size(), v.words_.begin());
  v.clear_padding();
  return v;
}

void BinaryVector::set(std::size_t index, bool value) noexcept {
  const Word mask = Word{1} << (index % kWordBits);
  if (value) {
    words_[index / kWordBits] |= mask;
  } else {
    words_[index / kWordBits] &= ~mask;
  }
}

bool BinaryVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BinaryVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BinaryVector::find_first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return dim_;
}

void BinaryVector::require_same_dim(const BinaryVector& other) const {
  if (dim_ != other.dim_) {
    throw DimensionError("binary vector dimension mismatch: " + std::to_string(dim_) +
                         " vs " + std::to_string(other.dim_));
  }
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other) {
  require_same_dim(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BinaryVector& BinaryVector::operator&=(const BinaryVector& other) {
  require_same_dim(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BinaryVector& BinaryVector::operator|=(const BinaryVector& other) {
  require_same_dim(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BinaryVector& BinaryVector::complement() noexcept {
  for (Word& w : words_) w = ~w;
  clear_padding();
  return *this;
}

void BinaryVector::clear_padding() noexcept {
  const std::size_t tail = dim_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

BinaryVector BinaryVector::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > dim_) throw std::out_of_range("BinaryVector::slice out of range");
  BinaryVector out(length);
  const std::size_t shift = offset % kWordBits;
  const std::size_t first = offset / kWordBits;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    Word lo = words_[first + w] >> shift;
    if (shift != 0 && first + w + 1 < words_.size()) {
      lo |= words_[first + w + 1] << (kWordBits - shift);
    }
    out.words_[w] = lo;
  }
  out.clear_padding();
  return out;
}

void BinaryVector::xor_at(std::size_t offset, const BinaryVector& other) {
  if (offset + other.dim_ > dim_) throw std::out_of_range("BinaryVector::xor_at out of range");
  const std::size_t shift = offset % kWordBits;
  const std::size_t first = offset / kWordBits;
  for (std::size_t w = 0; w < other.words_.size(); ++w) {
    const Word src = other.words_[w];
    words_[first + w] ^= src << shift;
    if (shift != 0 && first + w + 1 < words_.size()) {
      words_[first + w + 1] ^= src >> (kWordBits - shift);
    }
  }
}

void BinaryVector::append(const BinaryVector& other) {
  const std::size_t offset = dim_;
  dim_ += other.dim_;
  words_.resize(words_for(dim_), 0);
  xor_at(offset, other);
}

std::string BinaryVector::to_string() const {
  std::string s(dim_, '0');
  for (std::size_t i = 0; i < dim_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::size_t BinaryVector::hash() const noexcept {
  // FNV-1a over the words, seeded with the dimension.
  std::uint64_t h = 1469598103934665603ULL ^ dim_;
  for (Word w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BinaryVector& a, const BinaryVector& b) noexcept {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const auto diff = a.words_[i] ^ b.words_[i];
    if (diff != 0) {
      const auto lowest = diff & (~diff + 1);
      return (a.words_[i] & lowest) ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

BinaryVector operator^(BinaryVector a, const BinaryVector& b) { return a ^= b; }
BinaryVector operator&(BinaryVector a, const BinaryVector& b) { return a &= b; }
BinaryVector operator|(BinaryVector a, const BinaryVector& b) { return a |= b; }
BinaryVector operator~(BinaryVector a) { return a.complement(); }

BinaryVector bv_op(const BinaryVector& a, const BinaryVector& b, Gate gate) {
  switch (gate) {
    case Gate::Xor: return a ^ b;
    case Gate::And: return a & b;
    case Gate::Or: return a | b;
    case Gate::Xnor: return ~(a ^ b);
    case Gate::Nand: return ~(a & b);
    case Gate::Nor: return ~(a | b);
    case Gate::Not: break;
  }
  throw std::invalid_argument("bv_op: NOT is unary, use bv_not");
}

BinaryVector bv_not(const BinaryVector& a) { return ~a; }

BinaryVector concat(std::span<const BinaryVector> parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  BinaryVector out(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    out.xor_at(offset, p);
    offset += p.dim();
  }
  return out;
}

// --- BinaryMatrix ----------------------------------------------------------

BinaryMatrix::BinaryMatrix(std::size_t rows, std::vector<BinaryVector> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (c.dim() != rows_) {
      throw DimensionError("matrix column has " + std::to_string(c.dim()) +
                           " rows, expected " + std::to_string(rows_));
    }
  }
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n);
  m.columns_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.columns_.push_back(BinaryVector::unit(n, i));
  return m;
}

BinaryMatrix BinaryMatrix::zeros(std::size_t rows, std::size_t cols) {
  return BinaryMatrix(rows, std::vector<BinaryVector>(cols, BinaryVector(rows)));
}

BinaryMatrix BinaryMatrix::from_columns(std::size_t rows,
                                        std::initializer_list<std::string_view> columns) {
  std::vector<BinaryVector> cols;
  cols.reserve(columns.size());
  for (auto c : columns) cols.push_back(BinaryVector::from_string(c));
  return BinaryMatrix(rows, std::move(cols));
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.begin()->size();
  BinaryMatrix out = zeros(n, m);
  std::size_t r = 0;
  for (auto row : rows) {
    if (row.size() != m) throw DimensionError("from_rows: ragged rows");
    const auto bits = BinaryVector::from_string(row);
    for (std::size_t c = 0; c < m; ++c) out.columns_[c].set(r, bits.test(c));
    ++r;
  }
  return out;
}

void BinaryMatrix::push_back(BinaryVector column) {
  if (column.dim() != rows_) {
    throw DimensionError("matrix column has " + std::to_string(column.dim()) +
                         " rows, expected " + std::to_string(rows_));
  }
  columns_.push_back(std::move(column));
}

void BinaryMatrix::erase_column(std::size_t index) {
  if (index >= columns_.size()) throw std::out_of_range("erase_column: index out of range");
  columns_.erase(columns_.begin() + static_cast<std::ptrdiff_t>(index));
}

BinaryVector BinaryMatrix::row(std::size_t index) const {
  if (index >= rows_) throw std::out_of_range("BinaryMatrix::row out of range");
  BinaryVector r(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) r.set(c, columns_[c].test(index));
  return r;
}

BinaryMatrix BinaryMatrix::gather_rows(
    std::span<const std::optional<std::size_t>> source_rows) const {
  BinaryMatrix out = zeros(source_rows.size(), columns_.size());
  for (std::size_t r = 0; r < source_rows.size(); ++r) {
    if (!source_rows[r]) continue;
    const std::size_t src = *source_rows[r];
    if (src >= rows_) throw std::out_of_range("gather_rows: source row out of range");
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (columns_[c].test(src)) out.columns_[c].set(r);
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::select_rows(std::span<const std::size_t> keep) const {
  std::vector<std::optional<std::size_t>> src(keep.begin(), keep.end());
  return gather_rows(src);
}

}  // namespace logizono
