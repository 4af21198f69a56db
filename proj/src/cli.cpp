#include "rrcode/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrcode/analysis.hpp"
#include "rrcode/error.hpp"
#include "rrcode/experiment.hpp"
#include "rrcode/level_grid.hpp"
#include "rrcode/loco.hpp"
#include "rrcode/patterns.hpp"
#include "rrcode/ragm.hpp"
#include "rrcode/rll.hpp"
#include "rrcode/schemes.hpp"
#include "rrcode/stream_file.hpp"

namespace rrcode::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  unsigned q = 8;
  int m = 7;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string scheme;
  std::uint64_t seed = 1;
  bool json = false;
  std::string direction = "both";
  std::string in;
  std::string out;
};

Scheme require_scheme(const std::string& name) {
  if (auto s = parse_scheme(name)) return *s;
  throw UsageError("unknown scheme '" + name + "'");
}

void require_q(unsigned q, unsigned min_q) {
  if (!is_valid_level_count(q) || q < min_q)
    throw UsageError("--q must be a power of two in [" + std::to_string(min_q) + ", 256]");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  return is;
}

int cmd_ragm(const Options& o, std::ostream& out) {
  require_q(o.q, 2);
  const GrayMap map(o.q);
  for (unsigned level = 0; level < o.q; ++level) {
    const Bits bits = map.level_to_bits(static_cast<Level>(level));
    out << level << ' ' << bits_to_string(Bits(bits.rbegin(), bits.rend())) << '\n';
  }
  return kOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const Tables tables = make_tables();
  if (o.json)
    out << to_json(tables).dump(2) << '\n';
  else
    out << format_tables(tables);
  return kOk;
}

int cmd_capacity(const Options& o, std::ostream& out) {
  require_q(o.q, 4);
  if (o.q > 64) throw UsageError("capacity supports q <= 64");
  const double lq = capacity_1d_Lq(o.q);
  const double rr = capacity_1d_rr(o.q);
  const double rr2 = capacity_2d_rr(o.q);
  const double gap = (lq - rr) / lq * 100.0;
  if (o.json) {
    out << nlohmann::json{{"q", o.q}, {"c1d_lq", lq}, {"c1d_rr", rr}, {"c2d_rr", rr2},
                          {"gap_percent", gap}}
               .dump(2)
        << '\n';
  } else {
    out << std::fixed << std::setprecision(4) << "q=" << o.q << " C1D_Lq=" << lq
        << " C1D_RR=" << rr << " C2D_RR=" << rr2 << " gap%=" << gap << '\n';
  }
  return kOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const Scheme scheme = require_scheme(o.scheme);
  require_q(o.q, 2);
  const bool bitline = scheme == Scheme::rr1d_bitline;
  const std::size_t line_length = bitline ? o.rows : o.cols;
  if (line_length == 0)
    throw UsageError(std::string(bitline ? "--rows" : "--cols") + " is required for " + o.scheme);
  if (scheme == Scheme::rr1d_wordline || scheme == Scheme::rr1d_bitline) {
    if (o.m < 2) throw UsageError("--m must be >= 2");
    if (line_length % static_cast<std::size_t>(o.m + 2) != 0)
      throw UsageError((bitline ? "--rows " : "--cols ") + std::to_string(line_length) +
                       " must be a multiple of m+2 = " + std::to_string(o.m + 2));
  }
  if (scheme == Scheme::rll_interleaved && line_length % (2 * kRllBlockLength) != 0)
    throw UsageError("--cols must be a multiple of " + std::to_string(2 * kRllBlockLength));

  auto in = open_in(o.in);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  const Bits data = bytes_to_bits(bytes);
  const EncodedPayload enc = encode_payload(data, scheme, o.q, o.m, line_length);

  {
    auto os = open_out(o.out + ".levels");
    write_level_grid(os, enc.levels);
  }
  {
    auto os = open_out(o.out + ".pages");
    write_page_grid(os, split_pages(enc.levels, GrayMap(o.q)));
  }
  if (scheme == Scheme::rr1d_wordline || scheme == Scheme::rr1d_bitline) {
    auto os = open_out(o.out + ".stream");
    write_loco_stream(os, LocoCode(o.m), enc.leftmost_payload, enc.leftmost_stream);
  } else if (scheme == Scheme::rll_interleaved) {
    auto os = open_out(o.out + ".stream");
    write_rll_stream(os, RllCode(kRllBlockLength, kRllMessageBits), enc.leftmost_payload,
                     enc.leftmost_stream);
  }
  nlohmann::json meta{{"scheme", o.scheme},         {"q", o.q},
                      {"m", o.m},                   {"rows", enc.levels.rows()},
                      {"cols", enc.levels.cols()},  {"nbits", enc.nbits}};
  if (scheme == Scheme::rll_interleaved) {
    meta["rll_n"] = kRllBlockLength;
    meta["rll_k"] = kRllMessageBits;
  }
  {
    auto os = open_out(o.out + ".meta.json");
    os << meta.dump(2) << '\n';
  }
  out << "encoded " << enc.nbits << " bits into " << enc.levels.rows() << "x" << enc.levels.cols()
      << " q=" << o.q << " grid (" << o.scheme << ")\n";
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  nlohmann::json meta;
  try {
    auto is = open_in(o.in + ".meta.json");
    meta = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("meta file: ") + e.what());
  }
  const auto scheme = parse_scheme(meta.at("scheme").get<std::string>());
  if (!scheme) throw FormatError("meta file: unknown scheme");
  auto is = open_in(o.in + ".levels");
  const LevelGrid levels = read_level_grid(is);
  if (levels.q() != meta.at("q").get<unsigned>() ||
      levels.rows() != meta.at("rows").get<std::size_t>() ||
      levels.cols() != meta.at("cols").get<std::size_t>())
    throw FormatError("level grid does not match the meta file");
  const Bits data =
      decode_payload(levels, *scheme, meta.at("m").get<int>(), meta.at("nbits").get<std::size_t>());
  const auto bytes = bits_to_bytes(data);
  auto os = open_out(o.out);
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out << "decoded " << data.size() << " bits\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Direction dir = Direction::both;
  if (o.direction == "h")
    dir = Direction::horizontal;
  else if (o.direction == "v")
    dir = Direction::vertical;
  else if (o.direction != "both")
    throw UsageError("--direction must be h, v or both");

  auto is = open_in(o.in);
  const LevelGrid grid = read_level_grid(is);
  if (o.q != 0 && o.q != grid.q())
    throw UsageError("--q " + std::to_string(o.q) + " does not match grid q=" +
                     std::to_string(grid.q()));
  if (grid.q() < 4) throw UsageError("verification needs q >= 4");
  const ViolationReport report = scan_grid(grid, forbidden_levels(grid.q()), dir);
  if (o.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << "horizontal " << report.horizontal_count() << "/" << report.horizontal_windows
        << " vertical " << report.vertical_count() << "/" << report.vertical_windows << '\n';
  }
  return report.total() == 0 ? kOk : kVerifyFailed;
}

int cmd_stats(const Options& o, std::ostream& out) {
  ExperimentConfig config;
  config.q = o.q;
  config.m = o.m;
  config.rows = o.rows;
  config.cols = o.cols;
  config.scheme = require_scheme(o.scheme);
  config.seed = o.seed;
  try {
    validate(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = to_json(run_stats(config)).dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    auto os = open_out(o.out);
    os << text;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Read-and-run constrained coding for multi-level flash"};
  app.require_subcommand(1);

  auto* ragm = app.add_subcommand("ragm", "Print the level to page-bit Gray map");
  ragm->add_option("--q", o.q, "Levels per cell")->required();

  auto* tables = app.add_subcommand("tables", "Capacity, rate and error-propagation tables");
  tables->add_flag("--json", o.json, "Machine-readable output");

  auto* capacity = app.add_subcommand("capacity", "Normalized capacities for one q");
  capacity->add_option("--q", o.q, "Levels per cell")->required();
  capacity->add_flag("--json", o.json, "Machine-readable output");

  auto* encode = app.add_subcommand("encode", "Encode a file into a level grid");
  encode->add_option("--scheme", o.scheme,
                     "uncoded | rr1d-wordline | rr1d-bitline | rr2d | rll-interleaved")
      ->required();
  encode->add_option("--q", o.q, "Levels per cell");
  encode->add_option("--m", o.m, "LOCO codeword length");
  encode->add_option("--cols", o.cols, "Cells per wordline (coded length for wordline schemes)");
  encode->add_option("--rows", o.rows, "Coded bitline length (rr1d-bitline only)");
  encode->add_option("--in", o.in, "Input file")->required()->check(CLI::ExistingFile);
  encode->add_option("--out", o.out, "Output prefix")->required();

  auto* decode = app.add_subcommand("decode", "Decode a grid written by encode");
  decode->add_option("--in", o.in, "Prefix given to encode --out")->required();
  decode->add_option("--out", o.out, "Output file")->required();

  auto* verify = app.add_subcommand("verify", "Scan a level grid for forbidden patterns");
  verify->add_option("--in", o.in, "Level grid file")->required()->check(CLI::ExistingFile);
  verify->add_option("--q", o.q, "Expected levels per cell");
  verify->add_option("--direction", o.direction, "h | v | both");
  verify->add_flag("--json", o.json, "Print the full violation report");

  auto* stats = app.add_subcommand("stats", "Random-data grid statistics for a scheme");
  stats->add_option("--scheme", o.scheme, "Scheme")->required();
  stats->add_option("--q", o.q, "Levels per cell");
  stats->add_option("--m", o.m, "LOCO codeword length");
  stats->add_option("--rows", o.rows, "Wordlines")->required();
  stats->add_option("--cols", o.cols, "Cells per wordline")->required();
  stats->add_option("--seed", o.seed, "RNG seed");
  stats->add_option("--out", o.out, "Write the JSON report here instead of stdout");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  // verify takes the q from the grid unless --q is given.
  const bool verify_requested =
      std::find(args.begin(), args.end(), std::string("verify")) != args.end();
  if (verify_requested) o.q = 0;

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ragm) return cmd_ragm(o, out);
    if (*tables) return cmd_tables(o, out);
    if (*capacity) return cmd_capacity(o, out);
    if (*encode) return cmd_encode(o, out);
    if (*decode) return cmd_decode(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*stats) return cmd_stats(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CodecError& e) {
    err << "codec error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace rrcode::cli
