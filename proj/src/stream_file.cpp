#include "rrcode/stream_file.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rrcode/error.hpp"

namespace rrcode {

namespace {

// Parses "<tag> key=value key=value ..." with the keys in the given order.
std::vector<unsigned long long> parse_header(const std::string& line, const std::string& tag,
                                             const std::vector<std::string>& keys) {
  std::istringstream in(line);
  std::string token;
  if (!(in >> token) || token != tag)
    throw FormatError("stream header: expected '" + tag + "', got '" + line + "'");
  std::vector<unsigned long long> values;
  for (const auto& key : keys) {
    if (!(in >> token) || token.rfind(key + "=", 0) != 0)
      throw FormatError("stream header: expected " + key + "=<value>");
    const auto text = token.substr(key.size() + 1);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError("stream header: bad value '" + token + "'");
    values.push_back(std::stoull(text));
  }
  if (in >> token) throw FormatError("stream header: unexpected field '" + token + "'");
  return values;
}

std::string read_line(std::istream& is, const char* what) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError(std::string("missing ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

Bits read_hex_payload(std::istream& is, std::size_t nbits) {
  std::string hex;
  if (!std::getline(is, hex)) {
    if (nbits == 0) return {};
    throw FormatError("missing hex payload");
  }
  if (!hex.empty() && hex.back() == '\r') hex.pop_back();
  if (hex.size() != (nbits + 7) / 8 * 2)
    throw FormatError("hex payload has " + std::to_string(hex.size()) + " digits, expected " +
                      std::to_string((nbits + 7) / 8 * 2));
  try {
    return hex_to_bits(hex, nbits);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::size_t frames_for(std::size_t nbits, std::size_t payload) {
  return (nbits + payload - 1) / payload;
}

}  // namespace

void write_loco_stream(std::ostream& os, const LocoCode& code, std::size_t nbits, BitSpan page) {
  os << "loco m=" << code.length() << " s=" << code.message_bits() << " nbits=" << nbits << '\n'
     << bits_to_hex(page) << '\n';
}

LocoStreamFile read_loco_stream(std::istream& is) {
  const auto v = parse_header(read_line(is, "stream header"), "loco", {"m", "s", "nbits"});
  LocoStreamFile file;
  if (v[0] < 2 || v[0] > 4096) throw FormatError("loco stream: unsupported m=" + std::to_string(v[0]));
  file.m = static_cast<int>(v[0]);
  if (static_cast<int>(v[1]) != message_length(file.m))
    throw FormatError("loco stream: s=" + std::to_string(v[1]) + " does not match m=" +
                      std::to_string(file.m));
  file.nbits = static_cast<std::size_t>(v[2]);
  const auto page_bits = frames_for(file.nbits, v[1]) * static_cast<std::size_t>(file.m + 2);
  file.page = read_hex_payload(is, page_bits);
  return file;
}

void write_rll_stream(std::ostream& os, const RllCode& code, std::size_t nbits, BitSpan page) {
  os << "rll n=" << code.block_length() << " k=" << code.message_bits() << " nbits=" << nbits
     << '\n'
     << bits_to_hex(page) << '\n';
}

RllStreamFile read_rll_stream(std::istream& is) {
  const auto v = parse_header(read_line(is, "stream header"), "rll", {"n", "k", "nbits"});
  RllStreamFile file;
  if (v[0] < 2 || v[0] > 90 || v[1] < 1 || v[1] > 32)
    throw FormatError("rll stream: unsupported n/k");
  file.n = static_cast<int>(v[0]);
  file.k = static_cast<int>(v[1]);
  file.nbits = static_cast<std::size_t>(v[2]);
  const auto page_bits = frames_for(file.nbits, 2 * v[1]) * 2 * v[0];
  file.page = read_hex_payload(is, static_cast<std::size_t>(page_bits));
  return file;
}

void write_page_grid(std::ostream& os, const PageGrid& pages) {
  os << "pages q=" << pages.q() << " rows=" << pages.rows() << " cols=" << pages.cols() << '\n';
  for (unsigned k = 0; k < pages.pages(); ++k)
    os << bits_to_hex(pages.plane(pages.pages() - 1 - k)) << '\n';
}

PageGrid read_page_grid(std::istream& is) {
  const auto v = parse_header(read_line(is, "page grid header"), "pages", {"q", "rows", "cols"});
  if (!is_valid_level_count(static_cast<unsigned>(v[0])) || v[0] > kMaxLevels)
    throw FormatError("page grid: invalid q=" + std::to_string(v[0]));
  PageGrid pages(static_cast<unsigned>(v[0]), static_cast<std::size_t>(v[1]),
                 static_cast<std::size_t>(v[2]));
  const std::size_t nbits = pages.rows() * pages.cols();
  for (unsigned k = 0; k < pages.pages(); ++k)
    pages.plane(pages.pages() - 1 - k) = read_hex_payload(is, nbits);
  return pages;
}

}  // namespace rrcode
