#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rrcode/bits.hpp"
#include "rrcode/level_grid.hpp"
#include "rrcode/ragm.hpp"

namespace rrcode {

// p = log2(q) binary planes of a grid, row-major. Plane p-1 is the
// left-most page.
class PageGrid {
 public:
  PageGrid() = default;
  PageGrid(unsigned q, std::size_t rows, std::size_t cols);

  unsigned q() const { return q_; }
  unsigned pages() const { return static_cast<unsigned>(planes_.size()); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Bits& plane(unsigned page) { return planes_.at(page); }
  const Bits& plane(unsigned page) const { return planes_.at(page); }
  std::uint8_t bit(unsigned page, std::size_t r, std::size_t c) const {
    return planes_[page][r * cols_ + c];
  }

  bool operator==(const PageGrid&) const = default;

 private:
  unsigned q_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Bits> planes_;
};

PageGrid split_pages(const LevelGrid& grid, const GrayMap& map);
LevelGrid assemble_levels(const PageGrid& pages, const GrayMap& map);

// Free positions of the 2D scheme's left-most page. A position is free when
// its wordline and bitline indices fall in the same half of their period
// of four; every other position holds a forced 1. Any three consecutive
// positions along a row or column span two residues that differ by 2, so
// one of the two end positions is forced, which rules out 000 and 010.
class Mask2D {
 public:
  Mask2D(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static bool is_free(std::size_t wordline, std::size_t bitline) {
    return ((wordline % 4) < 2) == ((bitline % 4) < 2);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t free_count() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
};

enum class Orientation { wordline, bitline };

// Identity for wordline coding, transpose for bitline coding.
LevelGrid orient(const LevelGrid& grid, Orientation orientation);

// A left-most page code with fixed frames: LocoCode or RllCode.
template <class Code>
concept FramedCode = requires(const Code& code, BitSpan bits) {
  { code.frame_bits() } -> std::convertible_to<int>;
  { code.payload_bits() } -> std::convertible_to<int>;
  { encode_stream(bits, code) } -> std::same_as<Bits>;
  { decode_stream(bits, code) } -> std::same_as<Bits>;
};

// Message bits carried on the left-most page of one line of `line_len`
// cells. Throws std::invalid_argument unless line_len is a whole number of
// frames.
template <FramedCode Code>
std::size_t line_payload_bits(const Code& code, std::size_t line_len);

struct LineData {
  Bits leftmost;  // left-most page message bits
  Bits other;     // pages p-2 .. 0, each `cols` bits, in that order
};

// One coded line (wordline, or bitline after transposition). `data_other`
// holds page p-2 first, then p-3, and so on down to page 0.
template <FramedCode Code>
std::vector<Level> encode_1d(BitSpan data_msb, BitSpan data_other, const GrayMap& map,
                             const Code& code, std::size_t cols);

// Inverse of encode_1d. Codec errors can only come from the left-most page.
template <FramedCode Code>
LineData decode_1d(std::span<const Level> line, const GrayMap& map, const Code& code);

// Pages p-2 .. 0 of a line, read straight from the levels. Never touches
// the left-most page code.
Bits read_uncoded_pages(std::span<const Level> line, const GrayMap& map);
Bits read_page(std::span<const Level> line, const GrayMap& map, unsigned page);

// Whole grid under 1D coding. Lines are wordlines (rows) or bitlines
// (columns); line i consumes the i-th chunk of `data_msb` and of
// `data_other`. A bitline grid is the transpose of the wordline grid with
// the same data, so for bitlines `rows` is the coded line length.
template <FramedCode Code>
LevelGrid encode_1d_grid(BitSpan data_msb, BitSpan data_other, const GrayMap& map,
                         const Code& code, std::size_t rows, std::size_t cols,
                         Orientation orientation);

template <FramedCode Code>
LineData decode_1d_grid(const LevelGrid& grid, const GrayMap& map, const Code& code,
                        Orientation orientation);

// Bits the 2D scheme stores on a rows x cols grid.
std::size_t capacity_2d(const GrayMap& map, std::size_t rows, std::size_t cols);

// `data` is the left-most page's free positions in row-major order, followed
// by the uncoded pages p-2 .. 0, each row-major. Throws std::invalid_argument
// if data.size() != capacity_2d(map, rows, cols).
LevelGrid encode_2d(BitSpan data, const GrayMap& map, std::size_t rows, std::size_t cols);
Bits decode_2d(const LevelGrid& grid, const GrayMap& map);

}  // namespace rrcode
