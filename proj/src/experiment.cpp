#include "rrcode/experiment.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "rrcode/error.hpp"
#include "rrcode/loco.hpp"
#include "rrcode/ragm.hpp"
#include "rrcode/rll.hpp"

namespace rrcode {

namespace {

constexpr std::pair<Scheme, std::string_view> kSchemeNames[] = {
    {Scheme::uncoded, "uncoded"},
    {Scheme::rr1d_wordline, "rr1d-wordline"},
    {Scheme::rr1d_bitline, "rr1d-bitline"},
    {Scheme::rr2d, "rr2d"},
    {Scheme::rll_interleaved, "rll-interleaved"},
};

bool is_1d(Scheme scheme) {
  return scheme == Scheme::rr1d_wordline || scheme == Scheme::rr1d_bitline ||
         scheme == Scheme::rll_interleaved;
}

Orientation orientation_of(Scheme scheme) {
  return scheme == Scheme::rr1d_bitline ? Orientation::bitline : Orientation::wordline;
}

// Runs `fn` with the left-most page code of a 1D scheme.
template <class Fn>
decltype(auto) with_line_code(Scheme scheme, int m, Fn&& fn) {
  if (scheme == Scheme::rll_interleaved) return fn(RllCode(kRllBlockLength, kRllMessageBits));
  return fn(LocoCode(m));
}

Bits padded(BitSpan data, std::size_t size) {
  Bits out(size, 0);
  std::copy(data.begin(), data.end(), out.begin());
  return out;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Cells of a rows x cols grid filled row by row; each row takes p*cols bits,
// left-most page first.
LevelGrid place_uncoded(BitSpan data, const GrayMap& map, std::size_t rows, std::size_t cols) {
  const unsigned p = map.pages();
  PageGrid pages(map.q(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (unsigned k = 0; k < p; ++k) {
      auto& plane = pages.plane(p - 1 - k);
      const std::size_t base = (r * p + k) * cols;
      std::copy_n(data.begin() + static_cast<std::ptrdiff_t>(base), cols,
                  plane.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
  return assemble_levels(pages, map);
}

Bits read_uncoded(const LevelGrid& levels, const GrayMap& map) {
  const PageGrid pages = split_pages(levels, map);
  const unsigned p = map.pages();
  const std::size_t cols = levels.cols();
  Bits out;
  out.reserve(levels.rows() * cols * p);
  for (std::size_t r = 0; r < levels.rows(); ++r)
    for (unsigned k = 0; k < p; ++k) {
      const auto& plane = pages.plane(p - 1 - k);
      out.insert(out.end(), plane.begin() + static_cast<std::ptrdiff_t>(r * cols),
                 plane.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
    }
  return out;
}

std::size_t row_free_count(std::size_t r, std::size_t cols) {
  std::size_t n = 0;
  for (std::size_t c = 0; c < cols; ++c) n += Mask2D::is_free(r, c) ? 1 : 0;
  return n;
}

// Lines of 1D data: splits per-line chunks [msb | other] into the two
// vectors encode_1d_grid takes.
struct SplitLines {
  Bits msb;
  Bits other;
};

SplitLines split_lines(BitSpan data, std::size_t lines, std::size_t msb_per_line,
                       std::size_t other_per_line) {
  SplitLines out;
  out.msb.reserve(lines * msb_per_line);
  out.other.reserve(lines * other_per_line);
  const std::size_t per_line = msb_per_line + other_per_line;
  for (std::size_t i = 0; i < lines; ++i) {
    auto chunk = data.subspan(i * per_line, per_line);
    out.msb.insert(out.msb.end(), chunk.begin(), chunk.begin() + static_cast<std::ptrdiff_t>(msb_per_line));
    out.other.insert(out.other.end(), chunk.begin() + static_cast<std::ptrdiff_t>(msb_per_line),
                     chunk.end());
  }
  return out;
}

std::size_t frame_of(Scheme scheme, int m) {
  return with_line_code(scheme, m, [](const auto& code) {
    return static_cast<std::size_t>(code.frame_bits());
  });
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  for (const auto& [s, name] : kSchemeNames)
    if (s == scheme) return name;
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (const auto& [s, n] : kSchemeNames)
    if (n == name) return s;
  return std::nullopt;
}

void validate(const ExperimentConfig& config) {
  if (!is_valid_level_count(config.q) || config.q < 4)
    throw std::invalid_argument("q must be a power of two in [4, 256]");
  if (config.rows == 0 || config.cols == 0)
    throw std::invalid_argument("rows and cols must be positive");
  if (config.scheme == Scheme::rr1d_wordline || config.scheme == Scheme::rr1d_bitline) {
    if (config.m < 2) throw std::invalid_argument("m must be >= 2");
  }
  if (is_1d(config.scheme)) {
    const std::size_t frame = frame_of(config.scheme, config.m);
    const bool bitline = config.scheme == Scheme::rr1d_bitline;
    const std::size_t line_len = bitline ? config.rows : config.cols;
    if (line_len % frame != 0)
      throw std::invalid_argument(std::string(bitline ? "rows" : "cols") + " (" +
                                  std::to_string(line_len) + ") must be a multiple of " +
                                  std::to_string(frame) + " for " +
                                  std::string(scheme_name(config.scheme)));
  }
}

Bits random_bits(std::uint64_t seed, std::uint64_t stream, std::size_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 gen(seq);
  Bits out(count);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 64 == 0) word = gen();
    out[i] = static_cast<std::uint8_t>(word & 1u);
    word >>= 1;
  }
  return out;
}

LevelGrid generate_grid(const ExperimentConfig& config) {
  validate(config);
  const GrayMap map(config.q);
  const unsigned p = map.pages();
  const std::size_t rows = config.rows;
  const std::size_t cols = config.cols;

  switch (config.scheme) {
    case Scheme::uncoded: {
      Bits data;
      data.reserve(rows * cols * p);
      for (std::size_t r = 0; r < rows; ++r) {
        const Bits chunk = random_bits(config.seed, r, cols * p);
        data.insert(data.end(), chunk.begin(), chunk.end());
      }
      return place_uncoded(data, map, rows, cols);
    }
    case Scheme::rr2d: {
      const std::size_t free_total = Mask2D(rows, cols).free_count();
      Bits data(free_total + rows * cols * (p - 1));
      std::size_t free_pos = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t free_here = row_free_count(r, cols);
        const Bits chunk = random_bits(config.seed, r, free_here + cols * (p - 1));
        std::copy_n(chunk.begin(), free_here, data.begin() + static_cast<std::ptrdiff_t>(free_pos));
        free_pos += free_here;
        for (unsigned k = 0; k + 1 < p; ++k)
          std::copy_n(chunk.begin() + static_cast<std::ptrdiff_t>(free_here + k * cols), cols,
                      data.begin() + static_cast<std::ptrdiff_t>(free_total + k * rows * cols + r * cols));
      }
      return encode_2d(data, map, rows, cols);
    }
    case Scheme::rr1d_wordline:
    case Scheme::rr1d_bitline:
    case Scheme::rll_interleaved:
      return with_line_code(config.scheme, config.m, [&](const auto& code) {
        const auto orientation = orientation_of(config.scheme);
        const bool bitline = orientation == Orientation::bitline;
        const std::size_t lines = bitline ? cols : rows;
        const std::size_t line_len = bitline ? rows : cols;
        const std::size_t msb_per_line = line_payload_bits(code, line_len);
        const std::size_t other_per_line = line_len * (p - 1);
        Bits data;
        data.reserve(lines * (msb_per_line + other_per_line));
        for (std::size_t i = 0; i < lines; ++i) {
          const Bits chunk = random_bits(config.seed, i, msb_per_line + other_per_line);
          data.insert(data.end(), chunk.begin(), chunk.end());
        }
        const auto split = split_lines(data, lines, msb_per_line, other_per_line);
        return encode_1d_grid(split.msb, split.other, map, code, rows, cols, orientation);
      });
  }
  throw std::logic_error("unhandled scheme");
}

double StatsReport::horizontal_rate() const {
  return horizontal_windows ? static_cast<double>(horizontal_violations) / horizontal_windows : 0.0;
}

double StatsReport::vertical_rate() const {
  return vertical_windows ? static_cast<double>(vertical_violations) / vertical_windows : 0.0;
}

StatsReport run_stats(const ExperimentConfig& config) {
  const LevelGrid grid = generate_grid(config);
  const GrayMap map(config.q);
  const auto violations = scan_grid(grid, forbidden_levels(config.q), Direction::both);

  StatsReport report;
  report.config = config;
  report.horizontal_violations = violations.horizontal_count();
  report.vertical_violations = violations.vertical_count();
  report.horizontal_windows = violations.horizontal_windows;
  report.vertical_windows = violations.vertical_windows;

  const double cells = static_cast<double>(grid.rows() * grid.cols());
  std::vector<std::size_t> level_counts(config.q, 0);
  for (auto level : grid.cells()) ++level_counts[level];
  for (auto n : level_counts) report.level_freq.push_back(static_cast<double>(n) / cells);

  const PageGrid pages = split_pages(grid, map);
  for (unsigned page = 0; page < pages.pages(); ++page) {
    const auto& plane = pages.plane(page);
    const auto zeros = std::count(plane.begin(), plane.end(), std::uint8_t{0});
    report.page_zero_freq.push_back(static_cast<double>(zeros) / cells);
  }
  return report;
}

nlohmann::json to_json(const StatsReport& report) {
  const auto& c = report.config;
  std::vector<double> page_one_freq;
  for (double z : report.page_zero_freq) page_one_freq.push_back(1.0 - z);
  return {
      {"config",
       {{"scheme", std::string(scheme_name(c.scheme))},
        {"q", c.q},
        {"m", c.m},
        {"rows", c.rows},
        {"cols", c.cols},
        {"seed", c.seed}}},
      {"rng", "mt19937_64 seed_seq{seed_lo, seed_hi, line_lo, line_hi}"},
      {"violations", {{"h", report.horizontal_violations}, {"v", report.vertical_violations}}},
      {"windows", {{"h", report.horizontal_windows}, {"v", report.vertical_windows}}},
      {"violation_rate", {{"h", report.horizontal_rate()}, {"v", report.vertical_rate()}}},
      {"level_freq", report.level_freq},
      {"page_zero_freq", report.page_zero_freq},
      {"page_one_freq", page_one_freq},
  };
}

EncodedPayload encode_payload(BitSpan data, Scheme scheme, unsigned q, int m,
                              std::size_t line_length) {
  if (line_length == 0) throw std::invalid_argument("line length must be positive");
  const GrayMap map(q);
  const unsigned p = map.pages();
  EncodedPayload out;
  out.scheme = scheme;
  out.m = m;
  out.nbits = data.size();

  switch (scheme) {
    case Scheme::uncoded: {
      const std::size_t cols = line_length;
      const std::size_t rows = ceil_div(data.size(), cols * p);
      out.levels = place_uncoded(padded(data, rows * cols * p), map, rows, cols);
      return out;
    }
    case Scheme::rr2d: {
      const std::size_t cols = line_length;
      std::size_t rows = 0;
      std::size_t capacity = 0;
      while (capacity < data.size()) {
        capacity += row_free_count(rows, cols) + cols * (p - 1);
        ++rows;
      }
      // The free bits come first in the 2D layout, so fill the whole
      // capacity and let decode truncate.
      out.levels = encode_2d(padded(data, capacity), map, rows, cols);
      return out;
    }
    case Scheme::rr1d_wordline:
    case Scheme::rr1d_bitline:
    case Scheme::rll_interleaved:
      with_line_code(scheme, m, [&](const auto& code) {
        const auto orientation = orientation_of(scheme);
        const std::size_t msb_per_line = line_payload_bits(code, line_length);
        const std::size_t other_per_line = line_length * (p - 1);
        const std::size_t lines = ceil_div(data.size(), msb_per_line + other_per_line);
        const auto split = split_lines(padded(data, lines * (msb_per_line + other_per_line)),
                                       lines, msb_per_line, other_per_line);
        const bool bitline = orientation == Orientation::bitline;
        out.levels = encode_1d_grid(split.msb, split.other, map, code,
                                    bitline ? line_length : lines, bitline ? lines : line_length,
                                    orientation);
        out.leftmost_stream = encode_stream(split.msb, code);
        out.leftmost_payload = split.msb.size();
      });
      return out;
  }
  throw std::logic_error("unhandled scheme");
}

Bits decode_payload(const LevelGrid& levels, Scheme scheme, int m, std::size_t nbits) {
  const GrayMap map(levels.q());
  Bits data;
  switch (scheme) {
    case Scheme::uncoded:
      data = read_uncoded(levels, map);
      break;
    case Scheme::rr2d:
      data = decode_2d(levels, map);
      break;
    case Scheme::rr1d_wordline:
    case Scheme::rr1d_bitline:
    case Scheme::rll_interleaved:
      data = with_line_code(scheme, m, [&](const auto& code) {
        const auto orientation = orientation_of(scheme);
        const std::size_t line_len =
            orientation == Orientation::bitline ? levels.rows() : levels.cols();
        const std::size_t lines =
            orientation == Orientation::bitline ? levels.cols() : levels.rows();
        const std::size_t msb_per_line = line_payload_bits(code, line_len);
        const std::size_t other_per_line = line_len * (map.pages() - 1);
        const LineData decoded = decode_1d_grid(levels, map, code, orientation);
        Bits joined;
        joined.reserve(lines * (msb_per_line + other_per_line));
        for (std::size_t i = 0; i < lines; ++i) {
          auto msb = BitSpan(decoded.leftmost).subspan(i * msb_per_line, msb_per_line);
          auto other = BitSpan(decoded.other).subspan(i * other_per_line, other_per_line);
          joined.insert(joined.end(), msb.begin(), msb.end());
          joined.insert(joined.end(), other.begin(), other.end());
        }
        return joined;
      });
      break;
  }
  if (nbits > data.size())
    throw FormatError("payload of " + std::to_string(nbits) + " bits exceeds grid capacity " +
                      std::to_string(data.size()));
  data.resize(nbits);
  return data;
}

}  // namespace rrcode
