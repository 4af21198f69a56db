#include "rrcode/rll.hpp"

#include <stdexcept>
#include <string>

#include "rrcode/error.hpp"

namespace rrcode {

std::uint64_t rll_count(int n) {
  if (n < 0 || n > 90) throw std::invalid_argument("rll_count defined for 0 <= n <= 90");
  std::uint64_t prev = 1, cur = 2;  // F(0), F(1)
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    const auto next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

RllCode::RllCode(int n, int k) : n_(n), k_(k) {
  if (n < 2 || n > 90 || k < 1 || k > 32)
    throw std::invalid_argument("RLL block code needs 2 <= n <= 90 and 1 <= k <= 32");
  for (int i = 0; i <= n; ++i) counts_.push_back(rll_count(i));
  if (counts_[static_cast<std::size_t>(n - 1)] < (std::uint64_t{1} << k))
    throw std::invalid_argument("F(" + std::to_string(n - 1) + ") = " +
                                std::to_string(counts_[static_cast<std::size_t>(n - 1)]) +
                                " codewords cannot carry " + std::to_string(k) + " bits");
}

namespace {

// No-00 strings of length `len` >= 1 that start with 0: the 0 is followed
// by a 1 and then any no-00 string.
std::uint64_t zero_led(const std::vector<std::uint64_t>& counts, int len) {
  return len >= 2 ? counts[static_cast<std::size_t>(len - 2)] : 1;
}

}  // namespace

Bits RllCode::encode_block(std::uint64_t msg) const {
  if (msg >= (std::uint64_t{1} << k_))
    throw std::out_of_range("message " + std::to_string(msg) + " needs more than " +
                            std::to_string(k_) + " bits");
  Bits word(static_cast<std::size_t>(n_), 0);
  word[0] = 1;
  std::uint64_t residual = msg;
  for (int j = 1; j < n_; ++j) {
    std::uint8_t bit = 1;
    if (word[static_cast<std::size_t>(j - 1)] == 1) {
      const auto zeros = zero_led(counts_, n_ - j);
      if (residual >= zeros)
        residual -= zeros;
      else
        bit = 0;
    }
    word[static_cast<std::size_t>(j)] = bit;
  }
  return word;
}

std::uint64_t RllCode::decode_block(BitSpan word) const {
  if (static_cast<int>(word.size()) != n_)
    throw std::invalid_argument("RLL block has " + std::to_string(word.size()) + " bits, expected " +
                                std::to_string(n_));
  if (word[0] != 1) throw std::invalid_argument("RLL codeword must start with 1");
  std::uint64_t rank = 0;
  for (int j = 1; j < n_; ++j) {
    const auto prev = word[static_cast<std::size_t>(j - 1)];
    const auto bit = word[static_cast<std::size_t>(j)];
    if (prev == 0 && bit == 0) throw std::invalid_argument("RLL codeword contains 00");
    if (prev == 1 && bit == 1) rank += zero_led(counts_, n_ - j);
  }
  if (rank >= (std::uint64_t{1} << k_))
    throw std::invalid_argument("RLL codeword rank " + std::to_string(rank) +
                                " is not a message index");
  return rank;
}

Bits RllCode::interleave_encode(std::uint64_t msg) const {
  if (k_ < 32 && msg >= (std::uint64_t{1} << (2 * k_)))
    throw std::out_of_range("message " + std::to_string(msg) + " needs more than " +
                            std::to_string(2 * k_) + " bits");
  const auto mask = (std::uint64_t{1} << k_) - 1;
  const Bits even = encode_block((msg >> k_) & mask);
  const Bits odd = encode_block(msg & mask);
  Bits out(static_cast<std::size_t>(2 * n_));
  for (std::size_t j = 0; j < even.size(); ++j) {
    out[2 * j] = even[j];
    out[2 * j + 1] = odd[j];
  }
  return out;
}

std::uint64_t RllCode::interleave_decode(BitSpan word) const {
  if (static_cast<int>(word.size()) != 2 * n_)
    throw std::invalid_argument("interleaved RLL frame has " + std::to_string(word.size()) +
                                " bits, expected " + std::to_string(2 * n_));
  Bits even(static_cast<std::size_t>(n_)), odd(static_cast<std::size_t>(n_));
  for (std::size_t j = 0; j < even.size(); ++j) {
    even[j] = word[2 * j];
    odd[j] = word[2 * j + 1];
  }
  return (decode_block(even) << k_) | decode_block(odd);
}

std::size_t encoded_length(std::size_t data_bits, const RllCode& code) {
  const auto payload = static_cast<std::size_t>(code.payload_bits());
  return (data_bits + payload - 1) / payload * static_cast<std::size_t>(code.frame_bits());
}

Bits encode_stream(BitSpan data, const RllCode& code) {
  const auto payload = static_cast<std::size_t>(code.payload_bits());
  Bits page;
  page.reserve(encoded_length(data.size(), code));
  for (std::size_t pos = 0; pos < data.size(); pos += payload) {
    std::uint64_t msg = 0;
    for (std::size_t k = 0; k < payload; ++k)
      msg = (msg << 1) | ((pos + k < data.size() && data[pos + k]) ? 1u : 0u);
    const Bits frame = code.interleave_encode(msg);
    page.insert(page.end(), frame.begin(), frame.end());
  }
  return page;
}

Bits decode_stream(BitSpan page, const RllCode& code) {
  const auto frame = static_cast<std::size_t>(code.frame_bits());
  const auto payload = static_cast<std::size_t>(code.payload_bits());
  if (page.size() % frame != 0)
    throw CodecError(CodecFault::bad_length, page.size() / frame,
                     "page length " + std::to_string(page.size()) + " is not a multiple of " +
                         std::to_string(frame));
  Bits data;
  data.reserve(page.size() / frame * payload);
  for (std::size_t block = 0; block * frame < page.size(); ++block) {
    std::uint64_t msg = 0;
    try {
      msg = code.interleave_decode(page.subspan(block * frame, frame));
    } catch (const std::invalid_argument& e) {
      throw CodecError(CodecFault::invalid_codeword, block, e.what());
    }
    for (std::size_t k = payload; k-- > 0;) data.push_back(static_cast<std::uint8_t>((msg >> k) & 1u));
  }
  return data;
}

}  // namespace rrcode
