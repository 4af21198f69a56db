#pragma once

#include <cstddef>
#include <iosfwd>

#include "rrcode/bits.hpp"
#include "rrcode/loco.hpp"
#include "rrcode/rll.hpp"
#include "rrcode/schemes.hpp"

namespace rrcode {

// Coded page bit-stream files: one header line, then the page bits as one
// line of hex (MSB first within each byte, zero-padded to a byte).
//
//   loco m=<m> s=<s> nbits=<payload bit count>
//   rll n=<n> k=<k> nbits=<payload bit count>
//
// The page length is implied by nbits: ceil(nbits / payload) frames.

struct LocoStreamFile {
  int m = 0;
  std::size_t nbits = 0;
  Bits page;
};

struct RllStreamFile {
  int n = 0;
  int k = 0;
  std::size_t nbits = 0;
  Bits page;
};

void write_loco_stream(std::ostream& os, const LocoCode& code, std::size_t nbits, BitSpan page);
// Throws FormatError on a malformed header, s inconsistent with m, or a
// payload whose length disagrees with nbits.
LocoStreamFile read_loco_stream(std::istream& is);

void write_rll_stream(std::ostream& os, const RllCode& code, std::size_t nbits, BitSpan page);
RllStreamFile read_rll_stream(std::istream& is);

// Page planes: header "pages q=<q> rows=<R> cols=<C>", then one hex line
// per plane (row-major bits), left-most page (p-1) first, page 0 last.
void write_page_grid(std::ostream& os, const PageGrid& pages);
PageGrid read_page_grid(std::istream& is);

}  // namespace rrcode
