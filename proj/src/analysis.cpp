#include "rrcode/analysis.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "rrcode/loco.hpp"

namespace rrcode {

namespace {

// The closed forms make sense for any power of two, not only storable q.
double log2_levels(unsigned q) {
  if (q < 2 || !std::has_single_bit(q))
    throw std::invalid_argument("q must be a power of two >= 2, got " + std::to_string(q));
  return static_cast<double>(std::countr_zero(q));
}

double round4(double x) { return std::round(x * 1e4) / 1e4; }

}  // namespace

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

PowerIteration power_iteration(const Adjacency& adj, double rel_tol, int max_iterations) {
  const std::size_t n = adj.size();
  PowerIteration result;
  if (n == 0) return result;
  std::vector<double> x(n, 1.0), y(n);
  double previous = 0.0;
  for (int it = 1; it <= max_iterations; ++it) {
    double xx = 0.0, xy = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (auto j : adj[i]) sum += x[j];
      y[i] = sum;
      xx += x[i] * x[i];
      xy += x[i] * sum;
      peak = std::max(peak, sum);
    }
    if (peak == 0.0) {  // nilpotent
      result.iterations = it;
      result.converged = true;
      return result;
    }
    const double estimate = xy / xx;
    result.eigenvalue = estimate;
    result.iterations = it;
    if (it > 1 && std::abs(estimate - previous) <= rel_tol * std::abs(estimate)) {
      result.converged = true;
      return result;
    }
    previous = estimate;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / peak;
  }
  return result;
}

Adjacency pair_state_graph(const PatternSet& ps) {
  const unsigned q = ps.q();
  Adjacency adj(static_cast<std::size_t>(q) * q);
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c)
        if (!ps.contains(static_cast<Level>(a), static_cast<Level>(b), static_cast<Level>(c)))
          adj[a * q + b].push_back(b * q + c);
  return adj;
}

double capacity_1d_Lq(unsigned q) {
  if (!is_valid_level_count(q) || q < 4 || q > 64)
    throw std::invalid_argument("capacity_1d_Lq needs q a power of two in [4, 64], got " +
                                std::to_string(q));
  const auto result = power_iteration(pair_state_graph(forbidden_levels(q)));
  if (!result.converged) throw std::runtime_error("power iteration did not converge");
  return std::log2(result.eigenvalue) / log2_levels(q);
}

double capacity_1d_rr(unsigned q) {
  const double p = log2_levels(q);
  return (std::log2(golden_ratio()) + p - 1.0) / p;
}

double capacity_2d_rr(unsigned q) {
  const double p = log2_levels(q);
  return (kRll01Capacity2D + p - 1.0) / p;
}

double capacity_gap_percent(unsigned q) {
  const double lq = capacity_1d_Lq(q);
  return (lq - capacity_1d_rr(q)) / lq * 100.0;
}

double rate_1d_rr(unsigned q, int m) {
  const double p = log2_levels(q);
  return (static_cast<double>(message_length(m)) / (m + 2) + p - 1.0) / p;
}

double rate_2d_rr(unsigned q) {
  const double p = log2_levels(q);
  return (p - 0.5) / p;
}

ErrorPropagation error_prop(unsigned q, int m) {
  const double p = log2_levels(q);
  return {(message_length(m) / 2.0 + p - 1.0) / p, 1.0};
}

SymbolProbs symbol_probs() {
  // The no-00 chain has transfer matrix [[0,1],[1,1]] (rows: from 0, from 1)
  // with Perron root phi and left = right eigenvector (1, phi). The
  // stationary weight of state 0 is 1*1 / (1 + phi^2) = 1 / (phi + 2).
  const double phi = golden_ratio();
  const double p0 = 1.0 / (phi + 2.0);
  return {p0, 1.0 - p0};
}

std::vector<double> level_probs(unsigned q) {
  page_count(q);
  const auto [p0, p1] = symbol_probs();
  std::vector<double> probs(q);
  for (unsigned level = 0; level < q; ++level)
    probs[level] = (level >= q / 2 ? p0 : p1) * 2.0 / q;
  return probs;
}

CodeMetrics code_metrics(unsigned q, int m) {
  CodeMetrics cm;
  cm.q = q;
  cm.m = m;
  cm.c1d_lq = capacity_1d_Lq(q);
  cm.c1d_rr = capacity_1d_rr(q);
  cm.c2d_rr = capacity_2d_rr(q);
  cm.r1d_rr = rate_1d_rr(q, m);
  cm.r2d_rr = rate_2d_rr(q);
  cm.s = message_length(m);
  const auto e = error_prop(q, m);
  cm.e1d_rr = e.one_d;
  cm.e2d_rr = e.two_d;
  return cm;
}

Tables make_tables() {
  Tables t;
  for (unsigned q : {4u, 8u, 16u}) {
    CapacityRow row;
    row.q = q;
    row.c1d_lq = capacity_1d_Lq(q);
    row.c1d_rr = capacity_1d_rr(q);
    const double lq = round4(row.c1d_lq);
    row.gap_percent = (lq - round4(row.c1d_rr)) / lq * 100.0;
    t.capacity.push_back(row);
    for (int m : {7, 11, 21}) t.rates.push_back(code_metrics(q, m));
  }
  return t;
}

std::string format_tables(const Tables& tables) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4);
  os << "Capacity (1D forbidden-level set vs 1D read-and-run)\n";
  os << std::setw(4) << "q" << std::setw(10) << "C1D_Lq" << std::setw(10) << "C1D_RR"
     << std::setw(10) << "gap%" << '\n';
  for (const auto& r : tables.capacity)
    os << std::setw(4) << r.q << std::setw(10) << r.c1d_lq << std::setw(10) << r.c1d_rr
       << std::setw(10) << r.gap_percent << '\n';
  os << "\nRate, adder size and error propagation\n";
  os << std::setw(4) << "q" << std::setw(4) << "m" << std::setw(9) << "R2D_RR" << std::setw(9)
     << "R1D_RR" << std::setw(4) << "s" << std::setw(9) << "E2D_RR" << std::setw(9) << "E1D_RR"
     << '\n';
  for (const auto& r : tables.rates)
    os << std::setw(4) << r.q << std::setw(4) << r.m << std::setw(9) << r.r2d_rr << std::setw(9)
       << r.r1d_rr << std::setw(4) << r.s << std::setw(9) << r.e2d_rr << std::setw(9) << r.e1d_rr
       << '\n';
  return os.str();
}

nlohmann::json to_json(const Tables& tables) {
  auto capacity = nlohmann::json::array();
  for (const auto& r : tables.capacity)
    capacity.push_back(
        {{"q", r.q}, {"c1d_lq", r.c1d_lq}, {"c1d_rr", r.c1d_rr}, {"gap_percent", r.gap_percent}});
  auto rates = nlohmann::json::array();
  for (const auto& r : tables.rates)
    rates.push_back({{"q", r.q},
                     {"m", r.m},
                     {"r2d_rr", r.r2d_rr},
                     {"r1d_rr", r.r1d_rr},
                     {"s", r.s},
                     {"e2d_rr", r.e2d_rr},
                     {"e1d_rr", r.e1d_rr},
                     {"c2d_rr", r.c2d_rr}});
  return {{"capacity", capacity}, {"rates", rates}};
}

}  // namespace rrcode
