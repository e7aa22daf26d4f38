#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logizono/binvec.hpp"
#include "logizono/logical_zonotope.hpp"

namespace logizono {

/// A Fibonacci LFSR. Taps are 1-based cell numbers. On every clock the
/// output bit is the XOR of the output taps, then all cells shift one
/// place toward the higher index (A[l] drops out) and A[1] receives the
/// XOR of the feedback taps taken before the shift.
struct LfsrSpec {
  std::size_t length = 60;
  std::vector<std::size_t> feedback{60, 59, 58, 14};
  std::vector<std::size_t> output{60, 59};
  /// Keystream length used by the key search; 0 means 2 * length.
  std::size_t message_length = 0;

  std::size_t effective_message_length() const noexcept {
    return message_length == 0 ? 2 * length : message_length;
  }

  /// Throws std::invalid_argument on an out-of-range tap or empty output taps.
  void validate() const;

  /// The default taps scaled to `length`: feedback {l, l-1, l-2, round(14 l / 60)},
  /// output {l, l-1}. Reproduces the defaults at l = 60.
  static LfsrSpec scaled(std::size_t length);
};

/// `count` keystream bits from a concrete key; bit i of the key is A[i+1].
BinaryVector lfsr_keystream(const LfsrSpec& spec, const BinaryVector& key, std::size_t count);

/// The same register run over 1-bit logical zonotopes, compacted after
/// every XOR.
std::vector<LogicalZonotope> lfsr_keystream(const LfsrSpec& spec,
                                            std::span<const LogicalZonotope> key,
                                            std::size_t count);

/// message XOR keystream.
BinaryVector lfsr_encrypt(const LfsrSpec& spec, const BinaryVector& key,
                          const BinaryVector& message);

/// Called after every key-bit decision with the current per-bit key sets.
using KeySearchObserver = std::function<void(std::span<const LogicalZonotope> key_sets)>;

/// Recovers a key that reproduces `cipher` from `message`.
///
/// Bits 1 and 2 are tried over all four combinations with the other bits
/// left as {0,1}. For each surviving combination every later bit j is
/// fixed to 0, and flipped to 1 when some keystream bit the partial key
/// determines contradicts the ciphertext. A candidate is accepted only if
/// re-encrypting the message with it reproduces `cipher`. Throws
/// SearchFailure when no combination does.
BinaryVector lfsr_recover_key(const LfsrSpec& spec, const BinaryVector& message,
                              const BinaryVector& cipher, const KeySearchObserver& observer = {});

/// Key of `length` bits from hex; bit 1 is the most significant bit of
/// the value. Throws std::invalid_argument when the value does not fit.
BinaryVector key_from_hex(std::string_view hex, std::size_t length);
/// Inverse of key_from_hex, "0x"-prefixed and lowercase.
std::string key_to_hex(const BinaryVector& key);

}  // namespace logizono
