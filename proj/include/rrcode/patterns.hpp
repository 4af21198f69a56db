#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "rrcode/level_grid.hpp"

namespace rrcode {

struct LevelTriple {
  Level first = 0;
  Level middle = 0;
  Level last = 0;

  auto operator<=>(const LevelTriple&) const = default;
  std::string str() const;  // e.g. "323"; levels >= 10 are separated by '.'
};

// Error-prone level patterns b1 u b2 with b1, b2 in the upper half of the
// levels {q/2, ..., q-1} and 0 <= u < min(b1, b2).
class PatternSet {
 public:
  unsigned q() const { return q_; }
  std::size_t size() const { return triples_.size(); }
  bool contains(const LevelTriple& t) const { return keys_.count(key(t)) != 0; }
  bool contains(Level a, Level b, Level c) const { return contains(LevelTriple{a, b, c}); }

  // Sorted lexicographically by (first, middle, last).
  const std::vector<LevelTriple>& triples() const { return triples_; }

 private:
  friend PatternSet forbidden_levels(unsigned q);
  static std::uint32_t key(const LevelTriple& t) {
    return (std::uint32_t{t.first} << 16) | (std::uint32_t{t.middle} << 8) | t.last;
  }

  unsigned q_ = 0;
  std::vector<LevelTriple> triples_;
  std::unordered_set<std::uint32_t> keys_;
};

// Throws std::invalid_argument unless q is a power of two with 4 <= q <= 256.
PatternSet forbidden_levels(unsigned q);

// Every i with (levels[i], levels[i+1], levels[i+2]) in the set. Throws
// std::out_of_range if a level is >= q.
std::vector<std::size_t> scan_sequence(std::span<const Level> levels, const PatternSet& ps);

enum class Direction { horizontal, vertical, both };

struct Violation {
  std::size_t row = 0;  // start row of the window
  std::size_t col = 0;  // start column of the window
  LevelTriple triple;
  bool operator==(const Violation&) const = default;
};

struct ViolationReport {
  std::vector<Violation> horizontal;
  std::vector<Violation> vertical;
  std::size_t horizontal_windows = 0;  // 3-windows inspected along wordlines
  std::size_t vertical_windows = 0;    // 3-windows inspected along bitlines

  std::size_t horizontal_count() const { return horizontal.size(); }
  std::size_t vertical_count() const { return vertical.size(); }
  std::size_t total() const { return horizontal.size() + vertical.size(); }
};

// Only fully contained windows are scanned; there is no wrap-around.
// Results are ordered row-major by window start.
ViolationReport scan_grid(const LevelGrid& grid, const PatternSet& ps, Direction dir);

// {horizontal:[{row,col,triple}], vertical:[...], counts:{h,v}, windows:{h,v}}
nlohmann::json to_json(const ViolationReport& report);

}  // namespace rrcode
