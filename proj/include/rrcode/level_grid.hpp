#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace rrcode {

using Level = std::uint8_t;

constexpr unsigned kMaxLevels = 256;

// q must be a power of two in [2, 256].
bool is_valid_level_count(unsigned q);
// log2(q); throws std::invalid_argument for an invalid q.
unsigned page_count(unsigned q);

// Charge levels of a block: rows are wordlines, columns are bitlines.
// Storage is row-major.
class LevelGrid {
 public:
  LevelGrid() = default;
  LevelGrid(unsigned q, std::size_t rows, std::size_t cols);

  // Rejects ragged input and levels >= q.
  static LevelGrid from_rows(unsigned q, const std::vector<std::vector<Level>>& rows);

  unsigned q() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Level at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  Level& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }

  std::span<const Level> row(std::size_t r) const {
    return {cells_.data() + r * cols_, cols_};
  }
  std::span<Level> row(std::size_t r) { return {cells_.data() + r * cols_, cols_}; }
  std::vector<Level> column(std::size_t c) const;
  std::span<const Level> cells() const { return cells_; }

  LevelGrid transposed() const;

  bool operator==(const LevelGrid&) const = default;

 private:
  unsigned q_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Level> cells_;
};

// Text format: header "q=<q> rows=<R> cols=<C>", then one wordline per line
// with space-separated decimal levels.
void write_level_grid(std::ostream& os, const LevelGrid& grid);
// Throws FormatError on a bad header, ragged rows, or out-of-range levels.
LevelGrid read_level_grid(std::istream& is);

}  // namespace rrcode
