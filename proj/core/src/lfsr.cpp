#include "logizono/lfsr.hpp"

#include <cmath>
#include <stdexcept>

#include "logizono/errors.hpp"

namespace logizono {

namespace {

const LogicalZonotope& zero_bit() {
  static const LogicalZonotope z(BinaryVector(1));
  return z;
}

const LogicalZonotope& one_bit() {
  static const LogicalZonotope z(BinaryVector::ones(1));
  return z;
}

const LogicalZonotope& unknown_bit() {
  static const LogicalZonotope z(BinaryVector(1), BinaryMatrix::from_columns(1, {"1"}));
  return z;
}

// Generic register so concrete bits and zonotope bits share one clocking rule.
template <typename Bit, typename Xor>
std::vector<Bit> run_register(const LfsrSpec& spec, std::vector<Bit> cells, std::size_t count,
                              Xor xor_bits) {
  std::vector<Bit> out;
  out.reserve(count);
  auto tap_xor = [&](const std::vector<std::size_t>& taps) {
    Bit acc = cells[taps.front() - 1];
    for (std::size_t t = 1; t < taps.size(); ++t) acc = xor_bits(acc, cells[taps[t] - 1]);
    return acc;
  };
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(tap_xor(spec.output));
    Bit fb = spec.feedback.empty() ? cells.back() : tap_xor(spec.feedback);
    for (std::size_t k = cells.size() - 1; k > 0; --k) cells[k] = std::move(cells[k - 1]);
    cells[0] = std::move(fb);
  }
  return out;
}

bool consistent(const std::vector<LogicalZonotope>& stream, const BinaryVector& message,
                const BinaryVector& cipher) {
  for (std::size_t t = 0; t < stream.size(); ++t) {
    // Keystream bit needed at t is cipher[t] ^ message[t].
    BinaryVector want(1);
    want.set(0, cipher.test(t) != message.test(t));
    if (!lz_contains(stream[t], want)) return false;
  }
  return true;
}

}  // namespace

void LfsrSpec::validate() const {
  if (length < 2) throw std::invalid_argument("LFSR length must be at least 2");
  if (output.empty()) throw std::invalid_argument("LFSR needs at least one output tap");
  for (const auto* taps : {&feedback, &output}) {
    for (auto t : *taps) {
      if (t < 1 || t > length) {
        throw std::invalid_argument("LFSR tap " + std::to_string(t) + " outside 1.." +
                                    std::to_string(length));
      }
    }
  }
}

LfsrSpec LfsrSpec::scaled(std::size_t length) {
  LfsrSpec s;
  s.length = length;
  const auto low = static_cast<std::size_t>(std::lround(14.0 * static_cast<double>(length) / 60.0));
  s.feedback = {length, length - 1, length - 2, std::max<std::size_t>(low, 1)};
  s.output = {length, length - 1};
  return s;
}

BinaryVector lfsr_keystream(const LfsrSpec& spec, const BinaryVector& key, std::size_t count) {
  spec.validate();
  if (key.dim() != spec.length) {
    throw DimensionError("key has " + std::to_string(key.dim()) + " bits, LFSR has " +
                         std::to_string(spec.length));
  }
  std::vector<bool> cells(spec.length);
  for (std::size_t i = 0; i < spec.length; ++i) cells[i] = key.test(i);
  const auto bits = run_register<bool>(spec, cells, count, [](bool a, bool b) { return a != b; });
  BinaryVector out(count);
  for (std::size_t i = 0; i < count; ++i) out.set(i, bits[i]);
  return out;
}

std::vector<LogicalZonotope> lfsr_keystream(const LfsrSpec& spec,
                                            std::span<const LogicalZonotope> key,
                                            std::size_t count) {
  spec.validate();
  if (key.size() != spec.length) {
    throw DimensionError("key has " + std::to_string(key.size()) + " bit sets, LFSR has " +
                         std::to_string(spec.length));
  }
  for (const auto& k : key) {
    if (k.dim() != 1) throw DimensionError("key bit sets must be 1-bit zonotopes");
  }
  return run_register<LogicalZonotope>(
      spec, std::vector<LogicalZonotope>(key.begin(), key.end()), count,
      [](const LogicalZonotope& a, const LogicalZonotope& b) { return lz_compact(lz_xor(a, b)); });
}

BinaryVector lfsr_encrypt(const LfsrSpec& spec, const BinaryVector& key,
                          const BinaryVector& message) {
  return message ^ lfsr_keystream(spec, key, message.dim());
}

BinaryVector lfsr_recover_key(const LfsrSpec& spec, const BinaryVector& message,
                              const BinaryVector& cipher, const KeySearchObserver& observer) {
  spec.validate();
  if (message.dim() != cipher.dim()) {
    throw DimensionError("message and ciphertext lengths differ");
  }
  const std::size_t l = spec.length;
  const std::size_t lm = message.dim();
  auto notify = [&](const std::vector<LogicalZonotope>& k) {
    if (observer) observer(k);
  };

  for (unsigned combo = 0; combo < 4; ++combo) {
    std::vector<LogicalZonotope> key(l, unknown_bit());
    key[0] = (combo & 2) ? one_bit() : zero_bit();
    key[1] = (combo & 1) ? one_bit() : zero_bit();
    notify(key);
    if (!consistent(lfsr_keystream(spec, key, lm), message, cipher)) continue;

    for (std::size_t j = 2; j < l; ++j) {
      key[j] = zero_bit();
      if (!consistent(lfsr_keystream(spec, key, lm), message, cipher)) key[j] = one_bit();
      notify(key);
    }

    BinaryVector candidate(l);
    for (std::size_t i = 0; i < l; ++i) candidate.set(i, key[i].center().test(0));
    if (lfsr_encrypt(spec, candidate, message) == cipher) return candidate;
  }
  throw SearchFailure("no key reproduces the ciphertext (wrong taps or message too short)");
}

BinaryVector key_from_hex(std::string_view hex, std::size_t length) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw std::invalid_argument("empty hex key");
  std::vector<bool> bits;  // most significant first
  for (char ch : hex) {
    int v;
    if (ch >= '0' && ch <= '9') {
      v = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      v = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      v = ch - 'A' + 10;
    } else {
      throw std::invalid_argument("invalid hex digit '" + std::string(1, ch) + "'");
    }
    for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  std::size_t lead = 0;
  while (bits.size() - lead > length) {
    if (bits[lead]) {
      throw std::invalid_argument("key 0x" + std::string(hex) + " does not fit in " +
                                  std::to_string(length) + " bits");
    }
    ++lead;
  }
  BinaryVector key(length);
  const std::size_t pad = length - (bits.size() - lead);
  for (std::size_t i = lead; i < bits.size(); ++i) key.set(pad + i - lead, bits[i]);
  return key;
}

std::string key_to_hex(const BinaryVector& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t n = key.dim();
  const std::size_t pad = (4 - n % 4) % 4;
  std::string out = "0x";
  for (std::size_t start = 0; start < n + pad; start += 4) {
    int v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t pos = start + b;  // position in the padded string
      const bool bit = pos >= pad && key.test(pos - pad);
      v = (v << 1) | static_cast<int>(bit);
    }
    out += kDigits[v];
  }
  return out;
}

}  // namespace logizono
