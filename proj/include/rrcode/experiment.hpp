#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rrcode/bits.hpp"
#include "rrcode/level_grid.hpp"
#include "rrcode/patterns.hpp"
#include "rrcode/schemes.hpp"

namespace rrcode {

enum class Scheme { uncoded, rr1d_wordline, rr1d_bitline, rr2d, rll_interleaved };

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

// The interleaved RLL scheme always uses the 12:18 block code.
inline constexpr int kRllBlockLength = 18;
inline constexpr int kRllMessageBits = 12;

// Grid geometry and coding for one experiment. For the 1D schemes the coded
// line length (cols for wordline/RLL, rows for bitline) must be a whole
// number of frames: m+2 cells for LOCO, 36 for the interleaved RLL code.
struct ExperimentConfig {
  unsigned q = 8;
  int m = 21;
  std::size_t rows = 0;
  std::size_t cols = 0;
  Scheme scheme = Scheme::uncoded;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument describing the first problem found.
void validate(const ExperimentConfig& config);

// Uniform random bits for coded line (or row) `stream`, derived from the
// seed with std::mt19937_64 (fully specified by the standard, so the same
// on every platform).
Bits random_bits(std::uint64_t seed, std::uint64_t stream, std::size_t count);

// Random data placed through the configured scheme.
LevelGrid generate_grid(const ExperimentConfig& config);

struct StatsReport {
  ExperimentConfig config;
  std::size_t horizontal_violations = 0;
  std::size_t vertical_violations = 0;
  std::size_t horizontal_windows = 0;
  std::size_t vertical_windows = 0;
  std::vector<double> level_freq;      // index = level
  std::vector<double> page_zero_freq;  // index = page (p-1 is left-most)

  double horizontal_rate() const;
  double vertical_rate() const;
};

// Requires q >= 4 (violations are counted against the forbidden level set).
StatsReport run_stats(const ExperimentConfig& config);
nlohmann::json to_json(const StatsReport& report);

// File-to-grid pipeline behind `encode` / `decode`. Input bits fill each
// line as [left-most page message bits | uncoded pages p-2..0]; the tail is
// zero-padded and `nbits` records the true length.
struct EncodedPayload {
  Scheme scheme = Scheme::uncoded;
  int m = 0;
  std::size_t nbits = 0;
  LevelGrid levels;
  // Concatenated left-most page of all coded lines (1D schemes only) and
  // the number of message bits it carries.
  Bits leftmost_stream;
  std::size_t leftmost_payload = 0;
};

// `line_length` is cols for every scheme except rr1d-bitline, where it is
// the number of rows. The other dimension grows to fit the data.
EncodedPayload encode_payload(BitSpan data, Scheme scheme, unsigned q, int m,
                              std::size_t line_length);

// Throws CodecError for channel data that is not a valid code sequence.
Bits decode_payload(const LevelGrid& levels, Scheme scheme, int m, std::size_t nbits);

}  // namespace rrcode
