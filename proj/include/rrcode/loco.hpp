#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrcode/bits.hpp"

namespace rrcode {

using BigInt = boost::multiprecision::cpp_int;

// N(i) for i >= -3: the number of i-bit words avoiding {000, 010}, with
// N(-3) = 0, N(-2) = N(-1) = N(0) = 1, N(1) = 2 and
// N(i) = N(i-1) + N(i-3) + N(i-4) for i >= 2.
BigInt cardinality(int m);

// floor(log2(N(m) - 1)): message bits per codeword once the all-ones word
// is dropped. Requires m >= 2.
int message_length(int m);

// Lexicographically ordered code of all m-bit words avoiding {000, 010}.
//
// Words are stored first-written bit first: element 0 of a codeword is
// c_{m-1}, the most significant bit in the lexicographic order, and element
// m-1 is c_0. Stream framing appends the bridge 11 after every codeword, so
// each message of s bits occupies m+2 page bits.
class LocoCode {
 public:
  explicit LocoCode(int m);

  int length() const { return m_; }
  int message_bits() const { return s_; }
  int frame_bits() const { return m_ + 2; }
  int payload_bits() const { return s_; }

  const BigInt& cardinality() const { return count(m_); }
  // N(i) for -3 <= i <= m.
  const BigInt& count(int i) const { return table_.at(static_cast<std::size_t>(i + 3)); }

 private:
  int m_;
  int s_;
  std::vector<BigInt> table_;  // N(-3) .. N(m)
};

// Lexicographic index of a codeword. Throws std::invalid_argument if the
// word has the wrong length or contains 000 or 010.
BigInt decode_codeword(BitSpan word, const LocoCode& code);

// Unranking: the codeword whose index is `index`. Throws std::out_of_range
// unless 0 <= index < N(m).
Bits encode_codeword(const BigInt& index, const LocoCode& code);

// Complemented variant: words avoiding {101, 111}, ranked by
// g = sum_i a_i * N(i - a_{i+1}) with a_m = 0. Same cardinality.
BigInt asym_decode(BitSpan word, const LocoCode& code);
Bits asym_encode(const BigInt& index, const LocoCode& code);

// Splits `data` into s-bit big-endian messages (zero-padding the tail),
// encodes each and appends the bridge 11. The output avoids {000, 010}
// everywhere, including across frame boundaries.
Bits encode_stream(BitSpan data, const LocoCode& code);

// Inverse of encode_stream. Returns frames * s bits, i.e. including any tail
// padding; the caller keeps the original bit count. Throws CodecError on a
// bad length, a bridge other than 11, or a block that is not a codeword for
// a message index < 2^s.
Bits decode_stream(BitSpan page, const LocoCode& code);

// Number of page bits encode_stream produces for `data_bits` input bits.
std::size_t encoded_length(std::size_t data_bits, const LocoCode& code);

}  // namespace rrcode
