#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrcode/patterns.hpp"

namespace rrcode {

// Capacity of the 2D (0,1) RLL constraint, a literature value; it is not
// computed here.
inline constexpr double kRll01Capacity2D = 0.5879;

// (1 + sqrt 5) / 2
double golden_ratio();

// Out-adjacency lists of a 0/1 matrix.
using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct PowerIteration {
  double eigenvalue = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Dominant eigenvalue of a nonnegative primitive 0/1 matrix. Starts from the
// all-ones vector and stops when successive Rayleigh-quotient estimates
// agree to `rel_tol`.
PowerIteration power_iteration(const Adjacency& adj, double rel_tol = 1e-12,
                               int max_iterations = 1'000'000);

// States are level pairs (a, b), index a*q + b; (a, b) -> (b, c) unless
// (a, b, c) is forbidden. Same language as the (q+1)-state diagram, so the
// same spectral radius.
Adjacency pair_state_graph(const PatternSet& ps);

// log2(lambda_max) / log2(q) for sequences avoiding the forbidden level set.
// Requires 4 <= q <= 64.
double capacity_1d_Lq(unsigned q);
// (log2(phi) + log2 q - 1) / log2 q: left-most page under {000,010}, other
// pages free.
double capacity_1d_rr(unsigned q);
// (0.5879 + log2 q - 1) / log2 q
double capacity_2d_rr(unsigned q);
// (C_Lq - C_RR) / C_Lq * 100 on exact capacities.
double capacity_gap_percent(unsigned q);

// (floor(log2(N(m) - 1)) / (m + 2) + log2 q - 1) / log2 q
double rate_1d_rr(unsigned q, int m);
// (log2 q - 0.5) / log2 q
double rate_2d_rr(unsigned q);

struct ErrorPropagation {
  double one_d = 0.0;  // (s/2 + log2 q - 1) / log2 q
  double two_d = 1.0;
};
ErrorPropagation error_prop(unsigned q, int m);

struct SymbolProbs {
  double p0 = 0.0;
  double p1 = 0.0;
};
// Stationary symbol probabilities of the maxentropic no-00 chain:
// p0 = 1 / (phi + 2).
SymbolProbs symbol_probs();
// Per-level probabilities with the left-most page maxentropic and the other
// pages uniform: upper-half levels get 2 p0 / q, lower-half levels 2 p1 / q.
std::vector<double> level_probs(unsigned q);

struct CodeMetrics {
  unsigned q = 0;
  int m = 0;
  double c1d_lq = 0.0;
  double c1d_rr = 0.0;
  double c2d_rr = 0.0;
  double r1d_rr = 0.0;
  double r2d_rr = 0.0;
  int s = 0;
  double e1d_rr = 0.0;
  double e2d_rr = 1.0;
};
CodeMetrics code_metrics(unsigned q, int m);

struct CapacityRow {
  unsigned q = 0;
  double c1d_lq = 0.0;
  double c1d_rr = 0.0;
  // Gap on the capacities as tabulated (rounded to 4 decimals).
  double gap_percent = 0.0;
};

struct Tables {
  std::vector<CapacityRow> capacity;  // q = 4, 8, 16
  std::vector<CodeMetrics> rates;     // (q, m) in {4,8,16} x {7,11,21}
};
Tables make_tables();

std::string format_tables(const Tables& tables);
nlohmann::json to_json(const Tables& tables);

}  // namespace rrcode
