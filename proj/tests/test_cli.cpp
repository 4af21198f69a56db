#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rrcode/cli.hpp"
#include "rrcode/level_grid.hpp"
#include "rrcode/patterns.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rrcode");
  std::ostringstream out, err;
  const int code = rrcode::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("rrcode_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

void write_random(const std::string& file, std::size_t bytes, unsigned seed) {
  std::mt19937 rng(seed);
  std::ofstream os(file, std::ios::binary);
  for (std::size_t i = 0; i < bytes; ++i) os.put(static_cast<char>(rng() & 0xFF));
}

std::string slurp(const std::string& file) {
  std::ifstream is(file, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"ragm"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"capacity", "--q", "6"}).code == 2);
  CHECK(run({"stats", "--scheme", "rr1d-wordline", "--rows", "4", "--cols", "10", "--m", "7"})
            .code == 2);
  CHECK(run({"stats", "--scheme", "nope", "--rows", "4", "--cols", "10"}).code == 2);
}

TEST_CASE("ragm prints the table") {
  const auto r = run({"ragm", "--q", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 111\n1 110\n2 100\n3 101\n4 001\n5 000\n6 010\n7 011\n");
}

TEST_CASE("tables and capacity") {
  auto r = run({"tables"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.9401") != std::string::npos);
  r = run({"tables", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rates"].size() == 9);
  CHECK(run({"tables", "--json"}).out == r.out);
  r = run({"capacity", "--q", "8", "--json"});
  CHECK(r.code == 0);
  CHECK(std::abs(nlohmann::json::parse(r.out)["c1d_lq"].get<double>() - 0.9235) < 5e-4);
}

TEST_CASE("encode / verify / decode for each scheme") {
  TempDir dir;
  const std::string in = dir / "in.bin";
  write_random(in, 1024, 1);
  struct Case {
    std::vector<std::string> args;
    std::string direction;
  };
  const std::vector<Case> cases{
      {{"--scheme", "rr1d-wordline", "--q", "8", "--m", "7", "--cols", "63"}, "h"},
      {{"--scheme", "rr1d-bitline", "--q", "8", "--m", "7", "--rows", "36", "--cols", "4"}, "v"},
      {{"--scheme", "rr2d", "--q", "16", "--cols", "40"}, "both"},
      {{"--scheme", "rll-interleaved", "--q", "4", "--cols", "72"}, "h"},
      {{"--scheme", "uncoded", "--q", "8", "--cols", "64"}, ""},
  };
  int i = 0;
  for (const auto& cs : cases) {
    const std::string prefix = dir / ("out" + std::to_string(i++));
    std::vector<std::string> enc{"encode", "--in", in, "--out", prefix};
    enc.insert(enc.end(), cs.args.begin(), cs.args.end());
    REQUIRE(run(enc).code == 0);
    CHECK(fs::exists(prefix + ".levels"));
    CHECK(fs::exists(prefix + ".pages"));
    if (!cs.direction.empty()) {
      const auto v = run({"verify", "--in", prefix + ".levels", "--direction", cs.direction});
      CHECK(v.code == 0);
    } else {
      CHECK(run({"verify", "--in", prefix + ".levels"}).code == 1);
    }
    const std::string back = dir / "back.bin";
    REQUIRE(run({"decode", "--in", prefix, "--out", back}).code == 0);
    CHECK(slurp(back) == slurp(in));
    // encoding is deterministic
    const std::string again = prefix + "_again";
    enc[4] = again;
    REQUIRE(run(enc).code == 0);
    CHECK(slurp(again + ".levels") == slurp(prefix + ".levels"));
  }
}

TEST_CASE("1D wordline output usually fails vertical verification") {
  TempDir dir;
  write_random(dir / "in.bin", 4096, 2);
  REQUIRE(run({"encode", "--scheme", "rr1d-wordline", "--m", "7", "--cols", "63", "--in",
               dir / "in.bin", "--out", dir / "w"})
              .code == 0);
  CHECK(run({"verify", "--in", dir / "w.levels", "--direction", "v"}).code == 1);
  const auto j = run({"verify", "--in", dir / "w.levels", "--json"});
  CHECK(j.code == 1);
  const auto report = nlohmann::json::parse(j.out);
  CHECK(report["counts"]["h"] == 0);
  CHECK(report["counts"]["v"].get<int>() > 0);
}

TEST_CASE("uncoded random grid fails verification at the expected rate") {
  TempDir dir;
  write_random(dir / "in.bin", 64 * 64 * 3 / 8, 3);
  REQUIRE(run({"encode", "--scheme", "uncoded", "--q", "8", "--cols", "64", "--in", dir / "in.bin",
               "--out", dir / "u"})
              .code == 0);
  const auto r = run({"verify", "--in", dir / "u.levels", "--json"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  const double rate = j["counts"]["h"].get<double>() / j["windows"]["h"].get<double>();
  CHECK(std::abs(rate - 78.0 / 512.0) < 0.03);
}

TEST_CASE("encode edge cases") {
  TempDir dir;
  const std::string empty = dir / "empty.bin";
  std::ofstream(empty).close();
  REQUIRE(run({"encode", "--scheme", "rr1d-wordline", "--m", "7", "--cols", "18", "--in", empty,
               "--out", dir / "e"})
              .code == 0);
  std::ifstream is(dir / "e.levels");
  const auto g = rrcode::read_level_grid(is);
  CHECK(g.rows() == 0);
  CHECK(g.cols() == 18);
  REQUIRE(run({"decode", "--in", dir / "e", "--out", dir / "e.out"}).code == 0);
  CHECK(slurp(dir / "e.out").empty());

  write_random(dir / "x.bin", 10, 4);
  CHECK(run({"encode", "--scheme", "rr1d-wordline", "--m", "7", "--cols", "10", "--in",
             dir / "x.bin", "--out", dir / "x"})
            .code == 2);
  CHECK(run({"encode", "--scheme", "rr1d-wordline", "--in", dir / "missing.bin", "--out",
             dir / "x", "--cols", "9"})
            .code == 2);
}

TEST_CASE("decode reports corrupt data with exit 3") {
  TempDir dir;
  write_random(dir / "in.bin", 64, 5);
  REQUIRE(run({"encode", "--scheme", "rr1d-wordline", "--q", "8", "--m", "7", "--cols", "18",
               "--in", dir / "in.bin", "--out", dir / "c"})
              .code == 0);
  std::ifstream is(dir / "c.levels");
  auto g = rrcode::read_level_grid(is);
  is.close();
  g.at(0, 7) = 4;  // bridge cell loses its left-most 1
  {
    std::ofstream os(dir / "c.levels");
    rrcode::write_level_grid(os, g);
  }
  const auto r = run({"decode", "--in", dir / "c", "--out", dir / "c.out"});
  CHECK(r.code == 3);
  CHECK(r.err.find("bridge") != std::string::npos);
  CHECK(run({"decode", "--in", dir / "nothing", "--out", dir / "n.out"}).code == 3);
  {
    std::ofstream os(dir / "bad.levels");
    os << "q=8 rows=1 cols=2\n1 9\n";
  }
  CHECK(run({"verify", "--in", dir / "bad.levels"}).code == 3);
}

TEST_CASE("stats output is byte-identical for a fixed seed") {
  const std::vector<std::string> args{"stats", "--scheme", "rr1d-wordline", "--q", "8", "--m",
                                      "21",    "--rows",   "32",            "--cols", "230",
                                      "--seed", "123"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["config"]["seed"] == 123);
  CHECK(j["violations"]["h"] == 0);
}
