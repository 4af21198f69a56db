#include "rrcode/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrcode {

std::string LevelTriple::str() const {
  const bool wide = first >= 10 || middle >= 10 || last >= 10;
  std::string out = std::to_string(first);
  if (wide) out += '.';
  out += std::to_string(middle);
  if (wide) out += '.';
  out += std::to_string(last);
  return out;
}

PatternSet forbidden_levels(unsigned q) {
  if (!is_valid_level_count(q) || q < 4)
    throw std::invalid_argument("forbidden level set needs q a power of two, 4 <= q <= 256; got " +
                                std::to_string(q));
  PatternSet ps;
  ps.q_ = q;
  const unsigned half = q / 2;
  for (unsigned b1 = half; b1 < q; ++b1)
    for (unsigned mu = 0; mu < b1; ++mu)
      for (unsigned b2 = half; b2 < q; ++b2)
        if (mu < std::min(b1, b2))
          ps.triples_.push_back({static_cast<Level>(b1), static_cast<Level>(mu),
                                 static_cast<Level>(b2)});
  for (const auto& t : ps.triples_) ps.keys_.insert(PatternSet::key(t));
  return ps;
}

std::vector<std::size_t> scan_sequence(std::span<const Level> levels, const PatternSet& ps) {
  for (auto level : levels)
    if (level >= ps.q())
      throw std::out_of_range("level " + std::to_string(level) + " out of range for q=" +
                              std::to_string(ps.q()));
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i + 2 < levels.size(); ++i)
    if (ps.contains(levels[i], levels[i + 1], levels[i + 2])) hits.push_back(i);
  return hits;
}

ViolationReport scan_grid(const LevelGrid& grid, const PatternSet& ps, Direction dir) {
  if (grid.q() != ps.q())
    throw std::invalid_argument("grid q=" + std::to_string(grid.q()) +
                                " does not match pattern set q=" + std::to_string(ps.q()));
  ViolationReport report;
  const std::size_t rows = grid.rows();
  const std::size_t cols = grid.cols();

  if (dir != Direction::vertical) {
    for (std::size_t r = 0; r < rows; ++r) {
      auto line = grid.row(r);
      for (auto c : scan_sequence(line, ps))
        report.horizontal.push_back({r, c, {line[c], line[c + 1], line[c + 2]}});
    }
    report.horizontal_windows = cols >= 3 ? rows * (cols - 2) : 0;
  }
  if (dir != Direction::horizontal) {
    // Row-major over window starts, so the output order matches the
    // horizontal list.
    for (std::size_t r = 0; r + 2 < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        LevelTriple t{grid.at(r, c), grid.at(r + 1, c), grid.at(r + 2, c)};
        if (ps.contains(t)) report.vertical.push_back({r, c, t});
      }
    report.vertical_windows = rows >= 3 ? (rows - 2) * cols : 0;
  }
  return report;
}

nlohmann::json to_json(const ViolationReport& report) {
  auto list = [](const std::vector<Violation>& vs) {
    auto arr = nlohmann::json::array();
    for (const auto& v : vs)
      arr.push_back({{"row", v.row},
                     {"col", v.col},
                     {"triple", {v.triple.first, v.triple.middle, v.triple.last}}});
    return arr;
  };
  return {{"horizontal", list(report.horizontal)},
          {"vertical", list(report.vertical)},
          {"counts", {{"h", report.horizontal_count()}, {"v", report.vertical_count()}}},
          {"windows", {{"h", report.horizontal_windows}, {"v", report.vertical_windows}}}};
}

}  // namespace rrcode
