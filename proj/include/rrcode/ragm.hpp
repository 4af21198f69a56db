#pragma once

#include <cstdint>
#include <vector>

#include "rrcode/bits.hpp"
#include "rrcode/level_grid.hpp"

namespace rrcode {

// Recursive alternate Gray mapping between the q charge levels and p-bit
// page labels. Page/bit indices run right to left: bit 0 is the right-most
// page, bit p-1 the left-most. Immutable after construction.
//
// Built by reflection: level 0 is all ones; for i = 0..p-1 and
// j = 0..2^i-1, label(2^i + j) is label(2^i - 1 - j) with bit i flipped.
// The result is a Gray code (adjacent levels differ in one bit) whose
// left-most bit is 0 exactly on the upper half of the levels.
class GrayMap {
 public:
  explicit GrayMap(unsigned q);

  unsigned q() const { return q_; }
  unsigned pages() const { return pages_; }
  unsigned leftmost_page() const { return pages_ - 1; }

  // Packed label: bit i of the integer is page i.
  std::uint32_t label(Level level) const;
  Level label_to_level(std::uint32_t label) const;

  std::uint8_t page_bit(Level level, unsigned page) const {
    return static_cast<std::uint8_t>((label(level) >> page) & 1u);
  }

  // Element i of the result is page i, so element p-1 is the left-most page.
  Bits level_to_bits(Level level) const;
  Level bits_to_level(BitSpan bits) const;

 private:
  unsigned q_;
  unsigned pages_;
  std::vector<std::uint32_t> labels_;  // level -> label
  std::vector<Level> levels_;          // label -> level
};

inline GrayMap build_map(unsigned q) { return GrayMap(q); }

}  // namespace rrcode
