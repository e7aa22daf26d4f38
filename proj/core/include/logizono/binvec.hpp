#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace logizono {

/// The closed set of gates supported everywhere in the library.
enum class Gate : std::uint8_t { Xor, And, Or, Xnor, Nand, Nor, Not };

std::string_view gate_name(Gate gate) noexcept;
std::optional<Gate> gate_from_name(std::string_view name) noexcept;

/// Scalar truth table. `Not` ignores `rhs`.
bool apply_gate(Gate gate, bool lhs, bool rhs) noexcept;

/// A fixed-width vector over {0,1}, bit-packed LSB-first into 64-bit words.
///
/// Index 0 is bit 1 in 1-based notation and is printed leftmost. Padding bits
/// beyond `dim()` are always zero, so equality and hashing only see the
/// payload.
class BinaryVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinaryVector() = default;
  explicit BinaryVector(std::size_t dim);

  static BinaryVector ones(std::size_t dim);
  static BinaryVector unit(std::size_t dim, std::size_t index);
  /// Parses a string of '0'/'1' characters; throws std::invalid_argument.
  static BinaryVector from_string(std::string_view bits);
  static BinaryVector from_bits(std::initializer_list<int> bits);
  /// Low `dim` bits of `value`, bit 0 first.
  static BinaryVector from_word(Word value, std::size_t dim);
  /// Copies ceil(dim / 64) packed words; bits beyond `dim` are discarded.
  static BinaryVector from_words(std::span<const Word> words, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t index) const noexcept {
    return (words_[index / kWordBits] >> (index % kWordBits)) & 1U;
  }
  void set(std::size_t index, bool value = true) noexcept;
  void flip(std::size_t index) noexcept {
    words_[index / kWordBits] ^= Word{1} << (index % kWordBits);
  }

  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  std::size_t count() const noexcept;
  /// Index of the lowest set bit, or dim() when there is none.
  std::size_t find_first() const noexcept;

  BinaryVector& operator^=(const BinaryVector& other);
  BinaryVector& operator&=(const BinaryVector& other);
  BinaryVector& operator|=(const BinaryVector& other);
  /// In-place complement of the payload bits.
  BinaryVector& complement() noexcept;

  /// Bits [offset, offset + length).
  BinaryVector slice(std::size_t offset, std::size_t length) const;
  /// Appends `other` after the current last bit.
  void append(const BinaryVector& other);
  /// Writes `other` into bits [offset, offset + other.dim()) by XOR.
  void xor_at(std::size_t offset, const BinaryVector& other);

  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const BinaryVector& a, const BinaryVector& b) noexcept {
    return a.dim_ == b.dim_ && a.words_ == b.words_;
  }
  /// Orders by dimension, then lexicographically from index 0 with 0 < 1.
  friend std::strong_ordering operator<=>(const BinaryVector& a,
                                          const BinaryVector& b) noexcept;

 private:
  void clear_padding() noexcept;
  void require_same_dim(const BinaryVector& other) const;

  std::size_t dim_ = 0;
  std::vector<Word> words_;
};

BinaryVector operator^(BinaryVector a, const BinaryVector& b);
BinaryVector operator&(BinaryVector a, const BinaryVector& b);
BinaryVector operator|(BinaryVector a, const BinaryVector& b);
BinaryVector operator~(BinaryVector a);

/// Elementwise binary gate; throws DimensionError on mismatch.
/// `Gate::Not` is rejected with std::invalid_argument.
BinaryVector bv_op(const BinaryVector& a, const BinaryVector& b, Gate gate);
/// Elementwise complement.
BinaryVector bv_not(const BinaryVector& a);

/// Concatenation of `parts` in order.
BinaryVector concat(std::span<const BinaryVector> parts);

/// A rows x cols matrix over {0,1}, stored as a sequence of columns.
/// A matrix may have zero columns (an empty generator matrix) and, for
/// exponent matrices with no factors, zero rows.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t rows) : rows_(rows) {}
  BinaryMatrix(std::size_t rows, std::vector<BinaryVector> columns);

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix zeros(std::size_t rows, std::size_t cols);
  /// Builds from column bitstrings; every string must have length `rows`.
  static BinaryMatrix from_columns(std::size_t rows,
                                   std::initializer_list<std::string_view> columns);
  /// Builds from row bitstrings, top row first.
  static BinaryMatrix from_rows(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  bool empty() const noexcept { return columns_.empty(); }

  const BinaryVector& column(std::size_t index) const { return columns_.at(index); }
  std::span<const BinaryVector> columns() const noexcept { return columns_; }
  bool at(std::size_t row, std::size_t col) const { return columns_.at(col).test(row); }

  void push_back(BinaryVector column);
  void reserve(std::size_t cols) { columns_.reserve(cols); }
  void erase_column(std::size_t index);

  /// Row `index` as a vector of length cols().
  BinaryVector row(std::size_t index) const;
  /// New matrix whose row i is row `source_rows[i]` of this one, or all
  /// zeros when `source_rows[i]` is empty.
  BinaryMatrix gather_rows(std::span<const std::optional<std::size_t>> source_rows) const;
  /// New matrix keeping only the rows whose index is listed (in order).
  BinaryMatrix select_rows(std::span<const std::size_t> keep) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<BinaryVector> columns_;
};

}  // namespace logizono

template <>
struct std::hash<logizono::BinaryVector> {
  std::size_t operator()(const logizono::BinaryVector& v) const noexcept { return v.hash(); }
};
