#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tvclust/arma.hpp"
#include "tvclust/cluster.hpp"
#include "tvclust/distance.hpp"
#include "tvclust/wave_spectra.hpp"

namespace tvclust {

// The simulation benchmarks.  Each replication simulates a fresh batch of
// series from a fixed model catalogue, builds one dissimilarity matrix per
// measure, clusters it (complete linkage by default), cuts at k, and scores
// the partition against ground truth with sim_index.  Replications are
// independent (seed derived per replication) and may run in parallel; the
// accumulation is an ordered reduction, so tables are bit-identical for any
// thread count.  A replication whose simulation or estimation throws is
// abandoned and counted in failed_replications; means are taken over the
// survivors, and more than 1% failures aborts the whole run.

// Benchmark 1: twelve ARIMA processes, six stationary and six integrated;
//              T = 200, k = 2.
// Benchmark 2: five stationary ARMA shapes, four series each (20 items);
//              T in {200, 500, 1000}, k in {4, 5}.
// Benchmark 3: two JONSWAP sea states (hs = 3 m; tp = 3.6*sqrt(3) and
//              4.1*sqrt(3) s), four series each at dt = 1/1.28 s;
//              T in {100, 200, 1000} samples, k = 2.

std::vector<ArimaModel> benchmark1_models();  // (a)..(l)
std::vector<int> benchmark1_truth();          // 0 = stationary, 1 = integrated
std::vector<ArimaModel> benchmark2_models();  // (a)..(e)
std::vector<JonswapParams> benchmark3_states();

struct ExperimentSpec {
  int id = 1;                       // 1, 2 or 3
  std::vector<std::size_t> lengths; // empty = benchmark default
  std::vector<int> k_values;        // empty = benchmark default
  std::vector<Measure> measures;    // empty = benchmark default
  std::size_t replications = 0;     // 0 = benchmark default
  Linkage linkage = Linkage::complete;
  std::uint64_t seed = 20260818;
  MeasureConfig config;
};

struct ResultTable {
  struct Row {
    int experiment = 0;
    std::size_t length = 0;
    int k = 0;
    Measure measure{};
    double mean_sim = 0.0;
    std::size_t replications = 0;  // successful replications behind the mean
  };
  std::vector<Row> rows;
  std::size_t failed_replications = 0;
};

ResultTable run_experiment(const ExperimentSpec& spec);

// Transition study: repeated simulation of the three-sea-state scenario,
// TV matrix over the 36 window spectra, agglomeration, cut at each k, labels
// canonicalized by first occurrence in time.  counts[k][w][c] is the number
// of replications assigning window w to canonical cluster c.
struct TransitionSpec {
  std::size_t replications = 200;
  std::vector<int> k_values = {3, 5};
  Linkage linkage = Linkage::complete;
  std::uint64_t seed = 20260818;
  MeasureConfig config;
};

struct TransitionCounts {
  std::size_t n_windows = 0;
  std::vector<int> truth;  // ground-truth segment index per window
  std::map<int, std::vector<std::vector<std::size_t>>> counts;  // k -> [w][c]
  std::size_t replications = 0;  // successful replications (rows sum to this)
  std::size_t failed_replications = 0;
};

TransitionCounts run_transition(const TransitionSpec& spec);

enum class TableFormat { csv, json, markdown };
std::string emit_table(const ResultTable& table, TableFormat format);
std::string emit_table(const TransitionCounts& counts, TableFormat format);

}  // namespace tvclust
