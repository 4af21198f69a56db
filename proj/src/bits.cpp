#include "rrcode/bits.hpp"

#include <stdexcept>

namespace rrcode {

Bits bits_from_string(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == '0' || ch == '1')
      out.push_back(static_cast<std::uint8_t>(ch - '0'));
    else
      throw std::invalid_argument("bit string contains '" + std::string(1, ch) + "'");
  }
  return out;
}

std::string bits_to_string(BitSpan bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

Bits bytes_to_bits(std::span<const std::uint8_t> bytes) {
  Bits out;
  out.reserve(bytes.size() * 8);
  for (auto byte : bytes)
    for (int k = 7; k >= 0; --k) out.push_back((byte >> k) & 1u);
  return out;
}

std::vector<std::uint8_t> bits_to_bytes(BitSpan bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  return out;
}

std::string bits_to_hex(BitSpan bits) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (auto byte : bits_to_bytes(bits)) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 0xf]);
  }
  return out;
}

namespace {
int hex_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}
}  // namespace

Bits hex_to_bits(std::string_view hex, std::size_t nbits) {
  if (hex.size() * 4 < nbits)
    throw std::invalid_argument("hex payload shorter than declared bit count");
  Bits out;
  out.reserve(nbits);
  for (char ch : hex) {
    int v = hex_value(ch);
    if (v < 0) throw std::invalid_argument("invalid hex digit");
    for (int k = 3; k >= 0 && out.size() < nbits; --k)
      out.push_back(static_cast<std::uint8_t>((v >> k) & 1));
  }
  return out;
}

std::vector<std::size_t> zero_gap_zero_windows(BitSpan bits) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i + 2 < bits.size(); ++i)
    if (bits[i] == 0 && bits[i + 2] == 0) hits.push_back(i);
  return hits;
}

}  // namespace rrcode
