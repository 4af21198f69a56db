#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rrcode/analysis.hpp"
#include "rrcode/loco.hpp"
#include "rrcode/patterns.hpp"

using namespace rrcode;

namespace {

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("power iteration on small matrices") {
  // golden mean shift: 0 -> {0,1}, 1 -> {0}
  const Adjacency fib{{0, 1}, {0}};
  const auto r = power_iteration(fib);
  CHECK(r.converged);
  CHECK(near(r.eigenvalue, golden_ratio(), 1e-10));
  const Adjacency full{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
  CHECK(near(power_iteration(full).eigenvalue, 3.0, 1e-12));
}

TEST_CASE("pair graph for q=4") {
  const Adjacency adj = pair_state_graph(forbidden_levels(4));
  CHECK(adj.size() == 16);
  std::size_t edges = 0;
  for (const auto& out : adj) edges += out.size();
  CHECK(edges == 64 - 9);
}

TEST_CASE("spectral radius agrees with brute-force growth for q=4") {
  const double lambda = power_iteration(pair_state_graph(forbidden_levels(4))).eigenvalue;
  const double growth = std::log2(double(oracle::avoiding_sequences(4, 14)) /
                                  double(oracle::avoiding_sequences(4, 13)));
  CHECK(near(std::log2(lambda), growth, 1e-2));
  CHECK(oracle::avoiding_sequences(4, 3) == 64 - 9);
}

TEST_CASE("capacities") {
  CHECK(near(capacity_1d_Lq(4), 0.8941, 5e-4));
  CHECK(near(capacity_1d_Lq(8), 0.9235, 5e-4));
  CHECK(near(capacity_1d_Lq(16), 0.9401, 5e-4));
  CHECK(near(capacity_1d_rr(4), 0.8471, 5e-4));
  CHECK(near(capacity_1d_rr(8), 0.8981, 5e-4));
  CHECK(near(capacity_1d_rr(16), 0.9235, 5e-4));
  CHECK(near(capacity_2d_rr(4), 1.5879 / 2, 1e-12));
  CHECK(near(capacity_2d_rr(8), 2.5879 / 3, 1e-12));
  CHECK(near(capacity_2d_rr(4), 0.7940, 1e-4));
  CHECK(near(capacity_2d_rr(8), 0.8626, 1e-4));
  CHECK(near(capacity_2d_rr(2), 0.5879, 1e-12));
  CHECK(near(capacity_1d_rr(1u << 20), 1.0, 0.02));
  CHECK(capacity_1d_rr(1u << 20) > capacity_1d_rr(1u << 10));
  CHECK_THROWS(capacity_1d_Lq(2));
  CHECK_THROWS(capacity_1d_Lq(128));
  CHECK_THROWS(capacity_1d_rr(6));
}

TEST_CASE("capacity gap") {
  CHECK(near(capacity_gap_percent(4), 5.257, 5e-3));
  CHECK(near(capacity_gap_percent(8), 2.757, 5e-3));
  CHECK(near(capacity_gap_percent(16), 1.756, 5e-3));
  const Tables t = make_tables();
  REQUIRE(t.capacity.size() == 3);
  CHECK(near(t.capacity[0].gap_percent, 5.257, 5e-3));
  CHECK(near(t.capacity[1].gap_percent, 2.750, 5e-3));
}

TEST_CASE("monotone in q") {
  double prev[4] = {0, 0, 0, 0};
  for (unsigned q : {4u, 8u, 16u, 32u, 64u}) {
    const double cur[4] = {capacity_1d_Lq(q), capacity_1d_rr(q), capacity_2d_rr(q), rate_2d_rr(q)};
    for (int i = 0; i < 4; ++i) {
      CHECK(cur[i] > prev[i]);
      prev[i] = cur[i];
    }
    CHECK(capacity_2d_rr(q) < capacity_1d_rr(q));
  }
}

TEST_CASE("rates, adder sizes and error propagation reference rows") {
  struct Row {
    unsigned q;
    int m;
    double r2, r1;
    int s;
    double e1;
  };
  const Row rows[] = {
      {4, 7, 0.7500, 0.7778, 5, 1.750},   {4, 11, 0.7500, 0.8077, 8, 2.500},
      {4, 21, 0.7500, 0.8261, 15, 4.250}, {8, 7, 0.8333, 0.8519, 5, 1.500},
      {8, 11, 0.8333, 0.8718, 8, 2.000},  {8, 21, 0.8333, 0.8841, 15, 3.167},
      {16, 7, 0.8750, 0.8889, 5, 1.375},  {16, 11, 0.8750, 0.9038, 8, 1.750},
      {16, 21, 0.8750, 0.9130, 15, 2.625},
  };
  for (const auto& row : rows) {
    const CodeMetrics cm = code_metrics(row.q, row.m);
    CHECK(near(cm.r2d_rr, row.r2, 5e-5));
    CHECK(near(cm.r1d_rr, row.r1, 5e-5));
    CHECK(cm.s == row.s);
    CHECK(cm.e2d_rr == 1.0);
    CHECK(near(cm.e1d_rr, row.e1, 5e-4));
    CHECK(cm.r1d_rr < cm.c1d_rr);
    CHECK(cm.c1d_rr < cm.c1d_lq);
    CHECK(cm.r2d_rr < cm.c2d_rr);
  }
}

TEST_CASE("rate approaches capacity along m") {
  for (unsigned q : {4u, 8u, 16u}) {
    double prev = 0;
    for (int m : {7, 11, 21, 45, 93}) {
      const double r = rate_1d_rr(q, m);
      CHECK(r >= prev);
      CHECK(r < capacity_1d_rr(q));
      prev = r;
    }
  }
  CHECK(rate_1d_rr(8, 21) / capacity_1d_rr(8) >= 0.98);
  CHECK(rate_1d_rr(8, 21) / capacity_1d_Lq(8) >= 0.955);
}

TEST_CASE("symbol and level probabilities") {
  const SymbolProbs sp = symbol_probs();
  CHECK(near(sp.p0, 0.2764, 1e-4));
  CHECK(near(sp.p1, 0.7236, 1e-4));
  CHECK(near(sp.p0, 1.0 / (golden_ratio() + 2), 1e-15));
  // stationary distribution of the no-00 chain, from the transfer matrix [[0,1],[1,1]]
  // with maxentropic transitions: P(0->1)=1, P(1->0)=1/phi^2, so p0 = p1/phi^2.
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(near(sp.p0, sp.p1 / (phi * phi), 1e-12));
  const auto lp = level_probs(8);
  REQUIRE(lp.size() == 8);
  double sum = 0;
  for (unsigned l = 0; l < 8; ++l) {
    CHECK(near(lp[l], l >= 4 ? 0.0691 : 0.1809, 1e-4));
    sum += lp[l];
  }
  CHECK(near(sum, 1.0, 1e-12));
  for (unsigned q : {4u, 16u, 64u}) {
    double s = 0;
    for (double v : level_probs(q)) s += v;
    CHECK(near(s, 1.0, 1e-12));
  }
}

TEST_CASE("empirical zero frequency of coded pages at m=21") {
  const LocoCode code(21);
  std::mt19937_64 rng(21);
  Bits data;
  data.reserve(100000 * 15);
  for (int i = 0; i < 100000; ++i)
    for (int b = 14; b >= 0; --b) data.push_back(static_cast<std::uint8_t>((rng() >> 7) & 1u));
  const Bits page = encode_stream(data, code);
  std::size_t zeros = 0;
  for (auto b : page) zeros += b == 0;
  const double p0 = double(zeros) / double(page.size());
  CHECK(near(p0, 0.2764, 0.05));
}

TEST_CASE("tables: text and json agree") {
  const Tables t = make_tables();
  CHECK(t.rates.size() == 9);
  const auto j = to_json(t);
  CHECK(j == to_json(make_tables()));
  const std::string text = format_tables(t);
  CHECK(text.find("0.8941") != std::string::npos);
  CHECK(text.find("0.8841") != std::string::npos);
  CHECK(text.find("3.1667") != std::string::npos);
  for (const auto& row : j["rates"]) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", row["r1d_rr"].get<double>());
    CHECK(text.find(buf) != std::string::npos);
  }
}
