#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rrcode/error.hpp"
#include "rrcode/loco.hpp"
#include "rrcode/patterns.hpp"
#include "rrcode/ragm.hpp"
#include "rrcode/rll.hpp"
#include "rrcode/schemes.hpp"
#include "rrcode/stream_file.hpp"

using namespace rrcode;

namespace {

Bits plane_row(const PageGrid& pg, unsigned page, std::size_t r) {
  Bits out;
  for (std::size_t c = 0; c < pg.cols(); ++c) out.push_back(pg.bit(page, r, c));
  return out;
}

}  // namespace

TEST_CASE("encode_1d worked example, q=8 m=7") {
  const GrayMap map(8);
  const LocoCode code(7);
  const auto line = encode_1d(Bits(5, 0), Bits(18, 1), map, code, 9);
  CHECK(line == std::vector<Level>{7, 7, 0, 0, 7, 7, 0, 0, 0});
  CHECK(bits_to_string(read_page(line, map, 2)) == "001100111");
  CHECK(read_uncoded_pages(line, map) == Bits(18, 1));
  CHECK(scan_sequence(line, forbidden_levels(8)).empty());
  const LineData back = decode_1d(line, map, code);
  CHECK(back.leftmost == Bits(5, 0));
  CHECK(back.other == Bits(18, 1));
}

TEST_CASE("encode_1d size checks") {
  const GrayMap map(8);
  const LocoCode code(7);
  CHECK_THROWS_AS(encode_1d(Bits(5, 0), Bits(18, 1), map, code, 10), std::invalid_argument);
  CHECK_THROWS_AS(encode_1d(Bits(4, 0), Bits(18, 1), map, code, 9), std::invalid_argument);
  CHECK_THROWS_AS(encode_1d(Bits(5, 0), Bits(17, 1), map, code, 9), std::invalid_argument);
  CHECK(line_payload_bits(code, 27) == 15);
  CHECK(line_payload_bits(RllCode(), 72) == 48);
}

TEST_CASE("left-most bit 0 exactly on upper-half levels") {
  std::mt19937_64 rng(4);
  for (unsigned q : {4u, 8u, 16u}) {
    const GrayMap map(q);
    const LocoCode code(7);
    const unsigned p = map.pages();
    const auto line = encode_1d(oracle::random_bits(rng, 10), oracle::random_bits(rng, 18 * (p - 1)),
                                map, code, 18);
    const Bits top = read_page(line, map, p - 1);
    for (std::size_t c = 0; c < line.size(); ++c) CHECK((top[c] == 0) == (line[c] >= q / 2));
  }
}

TEST_CASE("random wordlines: no horizontal violations, exact round trip") {
  std::mt19937_64 rng(10000);
  for (unsigned q : {4u, 8u, 16u}) {
    const GrayMap map(q);
    const PatternSet ps = forbidden_levels(q);
    for (int m : {7, 11, 21}) {
      const LocoCode code(m);
      const std::size_t cols = 4 * static_cast<std::size_t>(m + 2);
      for (int t = 0; t < 300; ++t) {
        const Bits msb = oracle::random_bits(rng, line_payload_bits(code, cols));
        const Bits other = oracle::random_bits(rng, cols * (map.pages() - 1));
        const auto line = encode_1d(msb, other, map, code, cols);
        CHECK(scan_sequence(line, ps).empty());
        const LineData back = decode_1d(line, map, code);
        CHECK(back.leftmost == msb);
        CHECK(back.other == other);
      }
    }
  }
}

TEST_CASE("interleaved RLL wordlines") {
  std::mt19937_64 rng(36);
  const RllCode code;
  for (unsigned q : {4u, 8u, 16u}) {
    const GrayMap map(q);
    for (int t = 0; t < 200; ++t) {
      const Bits msb = oracle::random_bits(rng, 48);
      const Bits other = oracle::random_bits(rng, 72 * (map.pages() - 1));
      const auto line = encode_1d(msb, other, map, code, 72);
      CHECK(scan_sequence(line, forbidden_levels(q)).empty());
      const LineData back = decode_1d(line, map, code);
      CHECK(back.leftmost == msb);
      CHECK(back.other == other);
    }
  }
}

TEST_CASE("corrupting an uncoded page stays in that page") {
  const GrayMap map(8);
  const LocoCode code(7);
  std::mt19937_64 rng(5);
  const Bits msb = oracle::random_bits(rng, 15);
  const Bits other = oracle::random_bits(rng, 54);
  auto line = encode_1d(msb, other, map, code, 27);
  // flip page 0 of cell 4
  line[4] = map.label_to_level(map.label(line[4]) ^ 1u);
  const LineData back = decode_1d(line, map, code);
  CHECK(back.leftmost == msb);
  std::size_t diffs = 0;
  for (std::size_t i = 0; i < other.size(); ++i) diffs += back.other[i] != other[i];
  CHECK(diffs == 1);
  CHECK(back.other[27 + 4] != other[27 + 4]);
}

TEST_CASE("corrupting the left-most page is a codec error") {
  const GrayMap map(8);
  const LocoCode code(7);
  auto line = encode_1d(Bits(5, 0), Bits(18, 1), map, code, 9);
  line[7] = map.label_to_level(map.label(line[7]) ^ 4u);  // bridge bit
  CHECK_THROWS_AS(decode_1d(line, map, code), CodecError);
}

TEST_CASE("page reads depend only on their own plane") {
  std::mt19937_64 rng(77);
  for (unsigned q : {4u, 8u, 16u, 32u}) {
    const GrayMap map(q);
    const unsigned p = map.pages();
    for (unsigned page = 0; page < p; ++page) {
      const Bits target = oracle::random_bits(rng, 40);
      for (int t = 0; t < 20; ++t) {
        std::vector<Level> line(40);
        for (std::size_t c = 0; c < 40; ++c) {
          std::uint32_t label = static_cast<std::uint32_t>(rng() & ((1u << p) - 1));
          label = (label & ~(1u << page)) | (std::uint32_t{target[c]} << page);
          line[c] = map.label_to_level(label);
        }
        CHECK(read_page(line, map, page) == target);
      }
    }
  }
}

TEST_CASE("orientation: wordline vs bitline") {
  const GrayMap map(8);
  const LocoCode code(7);
  const PatternSet ps = forbidden_levels(8);
  std::mt19937_64 rng(8);
  // 6 lines of 18 cells
  const Bits msb = oracle::random_bits(rng, 6 * 10);
  const Bits other = oracle::random_bits(rng, 6 * 36);
  const LevelGrid wl = encode_1d_grid(msb, other, map, code, 6, 18, Orientation::wordline);
  const LevelGrid bl = encode_1d_grid(msb, other, map, code, 18, 6, Orientation::bitline);
  CHECK(wl.rows() == 6);
  CHECK(bl.rows() == 18);
  CHECK(bl == wl.transposed());
  CHECK(scan_grid(wl, ps, Direction::horizontal).total() == 0);
  CHECK(scan_grid(bl, ps, Direction::vertical).total() == 0);
  for (auto [grid, o] : {std::pair{wl, Orientation::wordline}, std::pair{bl, Orientation::bitline}}) {
    const LineData back = decode_1d_grid(grid, map, code, o);
    CHECK(back.leftmost == msb);
    CHECK(back.other == other);
  }
  CHECK(orient(wl, Orientation::wordline) == wl);
  CHECK_THROWS(decode_1d_grid(wl, GrayMap(4), code, Orientation::wordline));
}

TEST_CASE("2D mask: free positions") {
  CHECK(Mask2D(4, 4).free_count() == 8);
  CHECK(Mask2D(16, 64).free_count() == 512);
  CHECK(Mask2D(5, 3).free_count() == 8);  // rows 0,1,4 -> cols 0,1; rows 2,3 -> col 2
  for (std::size_t r = 1; r <= 13; ++r)
    for (std::size_t c = 1; c <= 13; ++c) {
      std::size_t n = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) n += Mask2D::is_free(i, j);
      CHECK(Mask2D(r, c).free_count() == n);
      if (r % 4 == 0 && c % 4 == 0) CHECK(2 * n == r * c);
    }
}

TEST_CASE("2D mask lemma over an 8x8 tile") {
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      if (!Mask2D::is_free(r, c)) continue;
      CHECK_FALSE(Mask2D::is_free(r, c + 2));
      CHECK_FALSE(Mask2D::is_free(r + 2, c));
    }
}

TEST_CASE("2D scheme: 4x4 all-zero free bits, q=4") {
  const GrayMap map(4);
  const Bits data(capacity_2d(map, 4, 4), 0);
  CHECK(data.size() == 8 + 16);
  const LevelGrid g = encode_2d(data, map, 4, 4);
  const PageGrid pages = split_pages(g, map);
  CHECK(bits_to_string(plane_row(pages, 1, 0)) == "0011");
  CHECK(bits_to_string(plane_row(pages, 1, 1)) == "0011");
  CHECK(bits_to_string(plane_row(pages, 1, 2)) == "1100");
  CHECK(bits_to_string(plane_row(pages, 1, 3)) == "1100");
  const PageGrid columns = split_pages(g.transposed(), map);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK_FALSE(oracle::has_zero_gap_zero(plane_row(pages, 1, i)));
    CHECK_FALSE(oracle::has_zero_gap_zero(plane_row(columns, 1, i)));
  }
  CHECK(scan_grid(g, forbidden_levels(4), Direction::both).total() == 0);
  CHECK(decode_2d(g, map) == data);
}

TEST_CASE("2D scheme: random fills round trip with no violations") {
  const GrayMap map(8);
  const PatternSet ps = forbidden_levels(8);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const Bits data = oracle::random_bits(rng, capacity_2d(map, 16, 64));
    const LevelGrid g = encode_2d(data, map, 16, 64);
    CHECK(scan_grid(g, ps, Direction::both).total() == 0);
    CHECK(decode_2d(g, map) == data);
  }
  // awkward sizes
  for (std::size_t r : {1u, 3u, 5u, 7u})
    for (std::size_t c : {2u, 6u, 9u}) {
      const Bits data = oracle::random_bits(rng, capacity_2d(map, r, c));
      const LevelGrid g = encode_2d(data, map, r, c);
      CHECK(scan_grid(g, ps, Direction::both).total() == 0);
      CHECK(decode_2d(g, map) == data);
    }
  CHECK_THROWS_AS(encode_2d(Bits(10, 0), map, 4, 4), std::invalid_argument);
}

TEST_CASE("2D data layout: free bits row-major, then pages p-2..0") {
  const GrayMap map(8);
  const std::size_t free = Mask2D(4, 4).free_count();
  Bits data(capacity_2d(map, 4, 4), 0);
  data[free + 1] = 1;        // page 1, cell (0,1)
  data[free + 16 + 5] = 1;   // page 0, cell (1,1)
  const PageGrid pg = split_pages(encode_2d(data, map, 4, 4), map);
  CHECK(pg.bit(1, 0, 1) == 1);
  CHECK(pg.bit(0, 1, 1) == 1);
  std::size_t ones = 0;
  for (unsigned pgi = 0; pgi < 2; ++pgi)
    for (auto b : pg.plane(pgi)) ones += b;
  CHECK(ones == 2);
}

TEST_CASE("pages split and reassemble; page file round trip") {
  std::mt19937_64 rng(12);
  const GrayMap map(16);
  LevelGrid g(16, 5, 7);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 7; ++c) g.at(r, c) = static_cast<Level>(rng() % 16);
  const PageGrid pg = split_pages(g, map);
  CHECK(pg.pages() == 4);
  CHECK(assemble_levels(pg, map) == g);
  std::stringstream ss;
  write_page_grid(ss, pg);
  CHECK(ss.str().rfind("pages q=16 rows=5 cols=7\n", 0) == 0);
  CHECK(read_page_grid(ss) == pg);
  std::stringstream bad("pages q=16 rows=5 cols=7\nzz\n");
  CHECK_THROWS_AS(read_page_grid(bad), FormatError);
}

TEST_CASE("stream files") {
  const LocoCode code(7);
  const Bits data = bits_from_string("10110");
  const Bits page = encode_stream(data, code);
  std::stringstream ss;
  write_loco_stream(ss, code, data.size(), page);
  const auto back = read_loco_stream(ss);
  CHECK(back.m == 7);
  CHECK(back.nbits == 5);
  CHECK(back.page == page);
  std::stringstream wrong_s("loco m=7 s=6 nbits=5\n00\n");
  CHECK_THROWS_AS(read_loco_stream(wrong_s), FormatError);

  const RllCode rll;
  const Bits rpage = encode_stream(data, rll);
  std::stringstream rs;
  write_rll_stream(rs, rll, data.size(), rpage);
  const auto rback = read_rll_stream(rs);
  CHECK(rback.n == 18);
  CHECK(rback.k == 12);
  CHECK(rback.page == rpage);
  std::stringstream garbage("rll n=18\n");
  CHECK_THROWS_AS(read_rll_stream(garbage), FormatError);
}
