#include "rrcode/level_grid.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rrcode/error.hpp"

namespace rrcode {

bool is_valid_level_count(unsigned q) {
  return q >= 2 && q <= kMaxLevels && (q & (q - 1)) == 0;
}

unsigned page_count(unsigned q) {
  if (!is_valid_level_count(q))
    throw std::invalid_argument("level count must be a power of two in [2, 256], got " +
                                std::to_string(q));
  unsigned p = 0;
  while ((1u << p) < q) ++p;
  return p;
}

LevelGrid::LevelGrid(unsigned q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), cells_(rows * cols, 0) {
  page_count(q);
}

LevelGrid LevelGrid::from_rows(unsigned q, const std::vector<std::vector<Level>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  LevelGrid grid(q, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged grid: row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " cells, expected " +
                                  std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] >= q)
        throw std::out_of_range("level " + std::to_string(rows[r][c]) + " out of range for q=" +
                                std::to_string(q));
      grid.at(r, c) = rows[r][c];
    }
  }
  return grid;
}

std::vector<Level> LevelGrid::column(std::size_t c) const {
  std::vector<Level> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

LevelGrid LevelGrid::transposed() const {
  LevelGrid t(q_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

void write_level_grid(std::ostream& os, const LevelGrid& grid) {
  os << "q=" << grid.q() << " rows=" << grid.rows() << " cols=" << grid.cols() << '\n';
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    auto line = grid.row(r);
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) os << ' ';
      os << static_cast<unsigned>(line[c]);
    }
    os << '\n';
  }
}

namespace {

std::size_t header_field(std::istringstream& in, const std::string& key) {
  std::string token;
  if (!(in >> token) || token.rfind(key + "=", 0) != 0)
    throw FormatError("grid header: expected " + key + "=<value>");
  try {
    std::size_t used = 0;
    auto value = std::stoull(token.substr(key.size() + 1), &used);
    if (used != token.size() - key.size() - 1) throw std::invalid_argument(token);
    return static_cast<std::size_t>(value);
  } catch (const std::logic_error&) {
    throw FormatError("grid header: bad value in '" + token + "'");
  }
}

}  // namespace

LevelGrid read_level_grid(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("grid: missing header");
  std::istringstream header(line);
  const auto q = header_field(header, "q");
  const auto rows = header_field(header, "rows");
  const auto cols = header_field(header, "cols");
  if (!is_valid_level_count(static_cast<unsigned>(q)) || q > kMaxLevels)
    throw FormatError("grid header: invalid q=" + std::to_string(q));

  LevelGrid grid(static_cast<unsigned>(q), rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!std::getline(is, line))
      throw FormatError("grid: expected " + std::to_string(rows) + " rows, got " +
                        std::to_string(r));
    std::istringstream cells(line);
    std::size_t c = 0;
    long long value = 0;
    while (cells >> value) {
      if (c >= cols)
        throw FormatError("grid: ragged row " + std::to_string(r) + " (too many cells)");
      if (value < 0 || static_cast<unsigned long long>(value) >= q)
        throw FormatError("grid: level " + std::to_string(value) + " out of range at row " +
                          std::to_string(r));
      grid.at(r, c++) = static_cast<Level>(value);
    }
    if (!cells.eof())
      throw FormatError("grid: non-numeric token in row " + std::to_string(r));
    if (c != cols)
      throw FormatError("grid: ragged row " + std::to_string(r) + " has " + std::to_string(c) +
                        " cells, expected " + std::to_string(cols));
  }
  return grid;
}

}  // namespace rrcode
