#include "rrcode/ragm.hpp"

#include <stdexcept>
#include <string>

namespace rrcode {

GrayMap::GrayMap(unsigned q) : q_(q), pages_(page_count(q)), labels_(q), levels_(q) {
  labels_[0] = (1u << pages_) - 1;
  for (unsigned i = 0; i < pages_; ++i) {
    const unsigned base = 1u << i;
    for (unsigned j = 0; j < base; ++j) labels_[base + j] = labels_[base - 1 - j] ^ (1u << i);
  }
  for (unsigned level = 0; level < q_; ++level)
    levels_[labels_[level]] = static_cast<Level>(level);
}

std::uint32_t GrayMap::label(Level level) const {
  if (level >= q_)
    throw std::out_of_range("level " + std::to_string(level) + " out of range for q=" +
                            std::to_string(q_));
  return labels_[level];
}

Level GrayMap::label_to_level(std::uint32_t label) const {
  if (label >= q_) throw std::out_of_range("label " + std::to_string(label) + " has too many bits");
  return levels_[label];
}

Bits GrayMap::level_to_bits(Level level) const {
  const auto l = label(level);
  Bits out(pages_);
  for (unsigned i = 0; i < pages_; ++i) out[i] = static_cast<std::uint8_t>((l >> i) & 1u);
  return out;
}

Level GrayMap::bits_to_level(BitSpan bits) const {
  if (bits.size() != pages_)
    throw std::invalid_argument("expected " + std::to_string(pages_) + " page bits, got " +
                                std::to_string(bits.size()));
  std::uint32_t l = 0;
  for (unsigned i = 0; i < pages_; ++i)
    if (bits[i]) l |= 1u << i;
  return levels_[l];
}

}  // namespace rrcode
