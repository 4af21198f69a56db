#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rrcode/bits.hpp"

namespace rrcode {

// Number of length-n binary strings with no 00: F(0) = 1, F(1) = 2,
// F(n) = F(n-1) + F(n-2). Valid for n <= 90 (fits in 64 bits).
std::uint64_t rll_count(int n);

// Fixed-length enumerative block code for the RLL (0,1) constraint (no 00).
// A k-bit message selects, in lexicographic order, one of the n-bit no-00
// strings that begin with 1. The leading 1 closes every concatenation, so
// no bridging bits are needed. Requires F(n-1) >= 2^k.
//
// Two codewords are interleaved bit by bit into a 2n-bit frame carrying 2k
// message bits. A binary sequence avoids {000, 010} exactly when its even
// and odd subsequences both avoid 00, so the frames can be written back to
// back on the left-most page.
class RllCode {
 public:
  RllCode(int n = 18, int k = 12);

  int block_length() const { return n_; }
  int message_bits() const { return k_; }
  int frame_bits() const { return 2 * n_; }
  int payload_bits() const { return 2 * k_; }

  // Unranking with F weights. Throws std::out_of_range unless msg < 2^k.
  Bits encode_block(std::uint64_t msg) const;
  // Throws std::invalid_argument on a wrong length, a leading 0, a 00, or a
  // rank >= 2^k.
  std::uint64_t decode_block(BitSpan word) const;

  // Splits msg into its high and low k-bit halves, encodes each and places
  // the first codeword on even positions, the second on odd positions.
  Bits interleave_encode(std::uint64_t msg) const;
  std::uint64_t interleave_decode(BitSpan word) const;

 private:
  int n_;
  int k_;
  std::vector<std::uint64_t> counts_;  // F(0) .. F(n)
};

// Stream framing as for the LOCO code: 2k-bit big-endian messages with the
// tail zero-padded, each written as one 2n-bit interleaved frame.
Bits encode_stream(BitSpan data, const RllCode& code);
// Throws CodecError (bad_length / invalid_codeword) with the frame index.
Bits decode_stream(BitSpan page, const RllCode& code);
std::size_t encoded_length(std::size_t data_bits, const RllCode& code);

}  // namespace rrcode
