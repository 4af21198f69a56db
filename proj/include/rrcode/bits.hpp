#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rrcode {

// One bit per element (0 or 1). Element 0 is the first bit written to the
// medium, i.e. the left-most / most significant bit of a codeword.
using Bits = std::vector<std::uint8_t>;
using BitSpan = std::span<const std::uint8_t>;

Bits bits_from_string(std::string_view text);
std::string bits_to_string(BitSpan bits);

// Byte <-> bit conversion, most significant bit of each byte first.
Bits bytes_to_bits(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> bits_to_bytes(BitSpan bits);

// Lowercase hex, MSB first within each byte, tail zero-padded to a byte.
std::string bits_to_hex(BitSpan bits);
// Inverse of bits_to_hex; keeps the first `nbits` bits. Throws
// std::invalid_argument on non-hex characters or too few digits.
Bits hex_to_bits(std::string_view hex, std::size_t nbits);

// Start positions i with bits[i] == 0 and bits[i+2] == 0, i.e. every
// occurrence of a pattern in {000, 010}.
std::vector<std::size_t> zero_gap_zero_windows(BitSpan bits);

inline bool avoids_zero_gap_zero(BitSpan bits) {
  for (std::size_t i = 0; i + 2 < bits.size(); ++i)
    if (bits[i] == 0 && bits[i + 2] == 0) return false;
  return true;
}

}  // namespace rrcode
