#include "rrcode/schemes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rrcode/loco.hpp"
#include "rrcode/rll.hpp"

namespace rrcode {

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(want) +
                                " bits, got " + std::to_string(got));
}

void require_same_q(const GrayMap& map, unsigned q) {
  if (map.q() != q)
    throw std::invalid_argument("Gray map is for q=" + std::to_string(map.q()) + ", grid has q=" +
                                std::to_string(q));
}

}  // namespace

PageGrid::PageGrid(unsigned q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), planes_(page_count(q), Bits(rows * cols, 0)) {}

PageGrid split_pages(const LevelGrid& grid, const GrayMap& map) {
  require_same_q(map, grid.q());
  PageGrid pages(grid.q(), grid.rows(), grid.cols());
  const auto cells = grid.cells();
  for (unsigned page = 0; page < pages.pages(); ++page) {
    auto& plane = pages.plane(page);
    for (std::size_t i = 0; i < cells.size(); ++i) plane[i] = map.page_bit(cells[i], page);
  }
  return pages;
}

LevelGrid assemble_levels(const PageGrid& pages, const GrayMap& map) {
  require_same_q(map, pages.q());
  LevelGrid grid(pages.q(), pages.rows(), pages.cols());
  for (std::size_t r = 0; r < pages.rows(); ++r)
    for (std::size_t c = 0; c < pages.cols(); ++c) {
      std::uint32_t label = 0;
      for (unsigned page = 0; page < pages.pages(); ++page)
        label |= std::uint32_t{pages.bit(page, r, c)} << page;
      grid.at(r, c) = map.label_to_level(label);
    }
  return grid;
}

std::size_t Mask2D::free_count() const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) n += is_free(r, c) ? 1 : 0;
  return n;
}

LevelGrid orient(const LevelGrid& grid, Orientation orientation) {
  return orientation == Orientation::wordline ? grid : grid.transposed();
}

template <FramedCode Code>
std::size_t line_payload_bits(const Code& code, std::size_t line_len) {
  const auto frame = static_cast<std::size_t>(code.frame_bits());
  if (line_len % frame != 0)
    throw std::invalid_argument("line length " + std::to_string(line_len) +
                                " is not a multiple of the frame length " + std::to_string(frame));
  return line_len / frame * static_cast<std::size_t>(code.payload_bits());
}

template <FramedCode Code>
std::vector<Level> encode_1d(BitSpan data_msb, BitSpan data_other, const GrayMap& map,
                             const Code& code, std::size_t cols) {
  const unsigned p = map.pages();
  require_size(data_msb.size(), line_payload_bits(code, cols), "left-most page data");
  require_size(data_other.size(), cols * (p - 1), "uncoded page data");

  const Bits leftmost = encode_stream(data_msb, code);
  std::vector<Level> line(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::uint32_t label = std::uint32_t{leftmost[c]} << (p - 1);
    for (unsigned k = 0; k + 1 < p; ++k) {
      const unsigned page = p - 2 - k;
      label |= std::uint32_t{data_other[k * cols + c]} << page;
    }
    line[c] = map.label_to_level(label);
  }
  return line;
}

Bits read_page(std::span<const Level> line, const GrayMap& map, unsigned page) {
  Bits out(line.size());
  for (std::size_t c = 0; c < line.size(); ++c) out[c] = map.page_bit(line[c], page);
  return out;
}

Bits read_uncoded_pages(std::span<const Level> line, const GrayMap& map) {
  Bits out;
  out.reserve(line.size() * (map.pages() - 1));
  for (unsigned k = 0; k + 1 < map.pages(); ++k) {
    const Bits page = read_page(line, map, map.pages() - 2 - k);
    out.insert(out.end(), page.begin(), page.end());
  }
  return out;
}

template <FramedCode Code>
LineData decode_1d(std::span<const Level> line, const GrayMap& map, const Code& code) {
  LineData out;
  out.other = read_uncoded_pages(line, map);
  line_payload_bits(code, line.size());
  out.leftmost = decode_stream(read_page(line, map, map.leftmost_page()), code);
  return out;
}

template <FramedCode Code>
LevelGrid encode_1d_grid(BitSpan data_msb, BitSpan data_other, const GrayMap& map,
                         const Code& code, std::size_t rows, std::size_t cols,
                         Orientation orientation) {
  // Code along rows of a (lines x line_len) grid, then orient.
  const bool by_rows = orientation == Orientation::wordline;
  const std::size_t lines = by_rows ? rows : cols;
  const std::size_t line_len = by_rows ? cols : rows;
  const std::size_t msb_per_line = line_payload_bits(code, line_len);
  const std::size_t other_per_line = line_len * (map.pages() - 1);
  require_size(data_msb.size(), lines * msb_per_line, "left-most page data");
  require_size(data_other.size(), lines * other_per_line, "uncoded page data");

  LevelGrid coded(map.q(), lines, line_len);
  for (std::size_t i = 0; i < lines; ++i) {
    const auto line = encode_1d(data_msb.subspan(i * msb_per_line, msb_per_line),
                                data_other.subspan(i * other_per_line, other_per_line), map,
                                code, line_len);
    std::copy(line.begin(), line.end(), coded.row(i).begin());
  }
  return orient(coded, orientation);
}

template <FramedCode Code>
LineData decode_1d_grid(const LevelGrid& grid, const GrayMap& map, const Code& code,
                        Orientation orientation) {
  require_same_q(map, grid.q());
  const LevelGrid coded = orient(grid, orientation);
  LineData out;
  for (std::size_t i = 0; i < coded.rows(); ++i) {
    auto line = decode_1d(coded.row(i), map, code);
    out.leftmost.insert(out.leftmost.end(), line.leftmost.begin(), line.leftmost.end());
    out.other.insert(out.other.end(), line.other.begin(), line.other.end());
  }
  return out;
}

std::size_t capacity_2d(const GrayMap& map, std::size_t rows, std::size_t cols) {
  return Mask2D(rows, cols).free_count() + rows * cols * (map.pages() - 1);
}

LevelGrid encode_2d(BitSpan data, const GrayMap& map, std::size_t rows, std::size_t cols) {
  require_size(data.size(), capacity_2d(map, rows, cols), "2D data");
  const unsigned p = map.pages();
  PageGrid pages(map.q(), rows, cols);
  std::size_t pos = 0;
  auto& leftmost = pages.plane(p - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      leftmost[r * cols + c] = Mask2D::is_free(r, c) ? data[pos++] : 1;
  for (unsigned k = 0; k + 1 < p; ++k) {
    auto& plane = pages.plane(p - 2 - k);
    std::copy(data.begin() + static_cast<std::ptrdiff_t>(pos),
              data.begin() + static_cast<std::ptrdiff_t>(pos + rows * cols), plane.begin());
    pos += rows * cols;
  }
  return assemble_levels(pages, map);
}

Bits decode_2d(const LevelGrid& grid, const GrayMap& map) {
  const PageGrid pages = split_pages(grid, map);
  const unsigned p = map.pages();
  Bits out;
  out.reserve(capacity_2d(map, grid.rows(), grid.cols()));
  const auto& leftmost = pages.plane(p - 1);
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c)
      if (Mask2D::is_free(r, c)) out.push_back(leftmost[r * grid.cols() + c]);
  for (unsigned k = 0; k + 1 < p; ++k) {
    const auto& plane = pages.plane(p - 2 - k);
    out.insert(out.end(), plane.begin(), plane.end());
  }
  return out;
}

#define RRCODE_INSTANTIATE_1D(Code)                                                             \
  template std::size_t line_payload_bits<Code>(const Code&, std::size_t);                       \
  template std::vector<Level> encode_1d<Code>(BitSpan, BitSpan, const GrayMap&, const Code&,    \
                                              std::size_t);                                     \
  template LineData decode_1d<Code>(std::span<const Level>, const GrayMap&, const Code&);       \
  template LevelGrid encode_1d_grid<Code>(BitSpan, BitSpan, const GrayMap&, const Code&,        \
                                          std::size_t, std::size_t, Orientation);               \
  template LineData decode_1d_grid<Code>(const LevelGrid&, const GrayMap&, const Code&,         \
                                         Orientation);

RRCODE_INSTANTIATE_1D(LocoCode)
RRCODE_INSTANTIATE_1D(RllCode)

#undef RRCODE_INSTANTIATE_1D

}  // namespace rrcode
