#include "rrcode/loco.hpp"

#include <stdexcept>
#include <string>

#include "rrcode/error.hpp"

namespace rrcode {

namespace {

constexpr int kOutOfBounds = -1;

std::vector<BigInt> cardinality_table(int m) {
  // Entries N(-3) .. N(max(m, 1)).
  std::vector<BigInt> t{0, 1, 1, 1, 2};
  for (int i = 2; i <= m; ++i) {
    const auto at = [&](int k) -> const BigInt& { return t[static_cast<std::size_t>(k + 3)]; };
    t.push_back(at(i - 1) + at(i - 3) + at(i - 4));
  }
  return t;
}

// c_i of a stored word, or kOutOfBounds for i >= m.
int bit_at(BitSpan word, int i) {
  const int m = static_cast<int>(word.size());
  return i >= m ? kOutOfBounds : word[static_cast<std::size_t>(m - 1 - i)];
}

// Index added by c_i = 1 given the two bits to its left. Zero when
// c_{i+2} = 0, since then c_i = 0 would create 000 or 010 and the bit is
// forced. After x0 (x = 1 or out of bounds) a zero continues as 00, which
// only the completions of Group 1 allow.
BigInt symmetric_weight(const LocoCode& code, int i, int left2, int left1) {
  if (left2 == 0) return 0;
  if (left1 == 0) return code.count(i - 2);
  return code.count(i - 2) + code.count(i - 3);
}

void check_width(BitSpan word, const LocoCode& code) {
  if (static_cast<int>(word.size()) != code.length())
    throw std::invalid_argument("codeword has " + std::to_string(word.size()) +
                                " bits, code length is " + std::to_string(code.length()));
}

void check_index(const BigInt& index, const LocoCode& code) {
  if (index < 0 || index >= code.cardinality())
    throw std::out_of_range("index " + index.str() + " outside [0, " + code.cardinality().str() +
                            ")");
}

bool avoids_one_gap_one(BitSpan word) {
  for (std::size_t i = 0; i + 2 < word.size(); ++i)
    if (word[i] == 1 && word[i + 2] == 1) return false;
  return true;
}

}  // namespace

BigInt cardinality(int m) {
  if (m < -3) throw std::invalid_argument("cardinality defined for m >= -3");
  return cardinality_table(m)[static_cast<std::size_t>(m + 3)];
}

int message_length(int m) {
  if (m < 2) throw std::invalid_argument("message_length needs m >= 2");
  const BigInt usable = cardinality(m) - 1;
  return static_cast<int>(boost::multiprecision::msb(usable));
}

LocoCode::LocoCode(int m) : m_(m), s_(0) {
  if (m < 2) throw std::invalid_argument("LOCO code length must be >= 2, got " + std::to_string(m));
  table_ = cardinality_table(m);
  s_ = message_length(m);
}

BigInt decode_codeword(BitSpan word, const LocoCode& code) {
  check_width(word, code);
  if (!avoids_zero_gap_zero(word))
    throw std::invalid_argument("word " + bits_to_string(word) + " contains 000 or 010");
  BigInt g = 0;
  for (int i = 0; i < code.length(); ++i)
    if (bit_at(word, i) == 1) g += symmetric_weight(code, i, bit_at(word, i + 2), bit_at(word, i + 1));
  return g;
}

Bits encode_codeword(const BigInt& index, const LocoCode& code) {
  check_index(index, code);
  const int m = code.length();
  Bits word(static_cast<std::size_t>(m), 0);
  BigInt residual = index;
  int left2 = kOutOfBounds;
  int left1 = kOutOfBounds;
  for (int i = m - 1; i >= 0; --i) {
    const BigInt weight = symmetric_weight(code, i, left2, left1);
    int c = 0;
    if (left2 == 0) {
      c = 1;
    } else if (residual >= weight) {
      c = 1;
      residual -= weight;
    }
    word[static_cast<std::size_t>(m - 1 - i)] = static_cast<std::uint8_t>(c);
    left2 = left1;
    left1 = c;
  }
  return word;
}

BigInt asym_decode(BitSpan word, const LocoCode& code) {
  check_width(word, code);
  if (!avoids_one_gap_one(word))
    throw std::invalid_argument("word " + bits_to_string(word) + " contains 101 or 111");
  BigInt g = 0;
  for (int i = 0; i < code.length(); ++i) {
    if (bit_at(word, i) != 1) continue;
    const int next = bit_at(word, i + 1) == 1 ? 1 : 0;
    g += code.count(i - next);
  }
  return g;
}

Bits asym_encode(const BigInt& index, const LocoCode& code) {
  check_index(index, code);
  const int m = code.length();
  Bits word(static_cast<std::size_t>(m), 0);
  BigInt residual = index;
  int left2 = 0;
  int left1 = 0;
  for (int i = m - 1; i >= 0; --i) {
    int c = 0;
    if (left2 != 1) {
      const BigInt& weight = code.count(i - left1);
      if (residual >= weight) {
        c = 1;
        residual -= weight;
      }
    }
    word[static_cast<std::size_t>(m - 1 - i)] = static_cast<std::uint8_t>(c);
    left2 = left1;
    left1 = c;
  }
  return word;
}

std::size_t encoded_length(std::size_t data_bits, const LocoCode& code) {
  const auto s = static_cast<std::size_t>(code.message_bits());
  return (data_bits + s - 1) / s * static_cast<std::size_t>(code.frame_bits());
}

Bits encode_stream(BitSpan data, const LocoCode& code) {
  const auto s = static_cast<std::size_t>(code.message_bits());
  Bits page;
  page.reserve(encoded_length(data.size(), code));
  for (std::size_t pos = 0; pos < data.size(); pos += s) {
    BigInt value = 0;
    for (std::size_t k = 0; k < s; ++k) {
      value <<= 1;
      if (pos + k < data.size() && data[pos + k]) value |= 1;
    }
    const Bits word = encode_codeword(value, code);
    page.insert(page.end(), word.begin(), word.end());
    page.push_back(1);
    page.push_back(1);
  }
  return page;
}

Bits decode_stream(BitSpan page, const LocoCode& code) {
  const auto m = static_cast<std::size_t>(code.length());
  const auto frame = static_cast<std::size_t>(code.frame_bits());
  const auto s = static_cast<std::size_t>(code.message_bits());
  if (page.size() % frame != 0)
    throw CodecError(CodecFault::bad_length, page.size() / frame,
                     "page length " + std::to_string(page.size()) + " is not a multiple of " +
                         std::to_string(frame));
  const BigInt limit = BigInt(1) << s;
  Bits data;
  data.reserve(page.size() / frame * s);
  for (std::size_t block = 0; block * frame < page.size(); ++block) {
    const auto word = page.subspan(block * frame, m);
    if (page[block * frame + m] != 1 || page[block * frame + m + 1] != 1)
      throw CodecError(CodecFault::corrupt_bridge, block,
                       "bridge is " + bits_to_string(page.subspan(block * frame + m, 2)));
    if (!avoids_zero_gap_zero(word))
      throw CodecError(CodecFault::invalid_codeword, block,
                       bits_to_string(word) + " contains 000 or 010");
    const BigInt value = decode_codeword(word, code);
    if (value >= limit)
      throw CodecError(CodecFault::invalid_codeword, block,
                       "index " + value.str() + " is not a message index");
    for (std::size_t k = s; k-- > 0;) data.push_back(bit_test(value, static_cast<unsigned>(k)) ? 1 : 0);
  }
  return data;
}

}  // namespace rrcode
