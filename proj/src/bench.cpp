#include "tvclust/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "tvclust/rng.hpp"
#include "tvclust/synthesis.hpp"
#include "tvclust/util.hpp"

namespace tvclust {

namespace {

std::string fmt(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::vector<ArimaModel> benchmark1_models() {
  return {
      ArimaModel({0.9}, {}),            // (a) AR(1)
      ArimaModel({0.95, -0.1}, {}),     // (b) AR(2)
      ArimaModel({0.95}, {0.1}),        // (c) ARMA(1,1)
      ArimaModel({-0.1}, {-0.95}),      // (d) ARMA(1,1)
      ArimaModel({}, {-0.9}),           // (e) MA(1)
      ArimaModel({}, {-0.95, -0.1}),    // (f) MA(2)
      ArimaModel({-0.1}, {}, 1),        // (g) ARIMA(1,1,0)
      ArimaModel({}, {}, 1),            // (h) ARIMA(0,1,0)
      ArimaModel({}, {0.1}, 1),         // (i) ARIMA(0,1,1)
      ArimaModel({}, {-0.1}, 1),        // (j) ARIMA(0,1,1)
      ArimaModel({0.1}, {-0.1}, 1),     // (k) ARIMA(1,1,1)
      ArimaModel({0.05}, {-0.05}, 1),   // (l) ARIMA(1,1,1)
  };
}

std::vector<int> benchmark1_truth() { return {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1}; }

std::vector<ArimaModel> benchmark2_models() {
  return {
      ArimaModel({0.5}, {}),          // (a) AR(1)
      ArimaModel({}, {0.7}),          // (b) MA(1)
      ArimaModel({0.6, 0.2}, {}),     // (c) AR(2)
      ArimaModel({}, {0.8, -0.6}),    // (d) MA(2)
      ArimaModel({0.8}, {0.2}),       // (e) ARMA(1,1)
  };
}

std::vector<JonswapParams> benchmark3_states() {
  const double root3 = std::sqrt(3.0);
  return {JonswapParams{3.0, 3.6 * root3, 9.81}, JonswapParams{3.0, 4.1 * root3, 9.81}};
}

namespace {

struct BenchmarkSetup {
  std::vector<std::size_t> lengths;
  std::vector<int> k_values;
  std::vector<Measure> measures;
  std::size_t replications = 0;
  Partition truth;
  std::size_t n_items = 0;
  double dt = 1.0;
};

std::vector<Measure> series_domain_measures() {
  return {Measure::acf_uniform, Measure::acf_geometric, Measure::pgram,
          Measure::pgram_norm,  Measure::log_pgram,     Measure::log_pgram_norm,
          Measure::cepstral,    Measure::total_variation, Measure::l1_log};
}

Partition grouped_truth(std::size_t groups, std::size_t per_group) {
  Partition p;
  p.k = static_cast<int>(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    p.label.insert(p.label.end(), per_group, static_cast<int>(g));
  }
  return p;
}

BenchmarkSetup setup_for(const ExperimentSpec& spec) {
  BenchmarkSetup s;
  switch (spec.id) {
    case 1:
      s.lengths = {200};
      s.k_values = {2};
      s.measures = series_domain_measures();
      s.replications = 300;
      s.truth.label = benchmark1_truth();
      s.truth.k = 2;
      s.n_items = 12;
      break;
    case 2:
      s.lengths = {200, 500, 1000};
      s.k_values = {4, 5};
      s.measures = series_domain_measures();
      s.replications = 100;
      s.truth = grouped_truth(5, 4);
      s.n_items = 20;
      break;
    case 3:
      s.lengths = {100, 200, 1000};
      s.k_values = {2};
      s.measures = all_measures();
      s.replications = 100;
      s.truth = grouped_truth(2, 4);
      s.n_items = 8;
      s.dt = 1.0 / 1.28;
      break;
    default:
      throw std::invalid_argument("unknown benchmark id " + std::to_string(spec.id));
  }
  if (!spec.lengths.empty()) s.lengths = spec.lengths;
  if (!spec.k_values.empty()) s.k_values = spec.k_values;
  if (!spec.measures.empty()) s.measures = spec.measures;
  if (spec.replications > 0) s.replications = spec.replications;
  return s;
}

// One replication: simulate the batch once, then score every measure at every k.
std::vector<double> replicate(const ExperimentSpec& spec, const BenchmarkSetup& setup,
                              std::size_t length, std::uint64_t rep_seed,
                              const std::vector<SpectralDensity>& state_spectra) {
  std::vector<TimeSeries> items;
  items.reserve(setup.n_items);
  if (spec.id == 3) {
    for (std::size_t i = 0; i < setup.n_items; ++i) {
      items.push_back(simulate_from_spectrum(state_spectra[i / 4], setup.dt, length,
                                             derive_seed(rep_seed, i)));
    }
  } else {
    const std::vector<ArimaModel> models =
        spec.id == 1 ? benchmark1_models() : benchmark2_models();
    const std::size_t per_model = setup.n_items / models.size();
    for (std::size_t i = 0; i < setup.n_items; ++i) {
      items.push_back(simulate_arima(models[i / per_model], length, derive_seed(rep_seed, i)));
    }
  }

  std::vector<double> sims;
  sims.reserve(setup.measures.size() * setup.k_values.size());
  for (const Measure m : setup.measures) {
    const DissimilarityMatrix d = build_matrix(items, m, spec.config);
    const Dendrogram dend = agglomerate(d, spec.linkage);
    for (const int k : setup.k_values) {
      sims.push_back(sim_index(cut(dend, k), setup.truth));
    }
  }
  return sims;
}

}  // namespace

ResultTable run_experiment(const ExperimentSpec& spec) {
  const BenchmarkSetup setup = setup_for(spec);

  std::vector<SpectralDensity> state_spectra;
  if (spec.id == 3) {
    const std::vector<double> grid = default_omega_grid(setup.dt, spec.config.grid_points);
    for (const JonswapParams& p : benchmark3_states()) {
      state_spectra.push_back(jonswap_spectrum(p, grid));
    }
  }

  ResultTable table;
  for (std::size_t li = 0; li < setup.lengths.size(); ++li) {
    const std::size_t length = setup.lengths[li];
    const std::uint64_t length_seed = derive_seed(spec.seed, li);

    // Per-replication results land in disjoint slots; the mean is accumulated
    // in replication order afterwards, so tables are thread-count invariant.
    // A throwing replication leaves its slot empty and is counted as failed.
    std::vector<std::vector<double>> slot(setup.replications);
    parallel_for(setup.replications, [&](std::size_t rep) {
      try {
        slot[rep] = replicate(spec, setup, length, derive_seed(length_seed, rep), state_spectra);
      } catch (const std::exception&) {
        slot[rep].clear();
      }
    });

    std::vector<double> sum(setup.measures.size() * setup.k_values.size(), 0.0);
    std::size_t ok = 0;
    for (const std::vector<double>& sims : slot) {
      if (sims.empty()) continue;
      ++ok;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += sims[i];
    }
    const std::size_t failed = setup.replications - ok;
    table.failed_replications += failed;
    if (failed * 100 > setup.replications) {
      throw std::runtime_error("benchmark run aborted: " + std::to_string(failed) + " of " +
                               std::to_string(setup.replications) +
                               " replications failed (limit 1%)");
    }

    std::size_t idx = 0;
    for (const Measure m : setup.measures) {
      for (const int k : setup.k_values) {
        ResultTable::Row row;
        row.experiment = spec.id;
        row.length = length;
        row.k = k;
        row.measure = m;
        row.mean_sim = sum[idx++] / static_cast<double>(ok);
        row.replications = ok;
        table.rows.push_back(row);
      }
    }
  }
  return table;
}

TransitionCounts run_transition(const TransitionSpec& spec) {
  const TransitionScenario scenario = three_state_scenario();

  // Ground truth and window count are structural, not stochastic.
  const LabeledRecord probe = simulate_transition_record(scenario, derive_seed(spec.seed, 0));
  const std::size_t n_windows = probe.window_labels.size();

  TransitionCounts out;
  out.n_windows = n_windows;
  out.truth = probe.window_labels;
  out.replications = spec.replications;
  for (const int k : spec.k_values) {
    out.counts[k].assign(n_windows, std::vector<std::size_t>(static_cast<std::size_t>(k), 0));
  }

  std::vector<std::vector<std::vector<int>>> slot(spec.replications);
  parallel_for(spec.replications, [&](std::size_t rep) {
    try {
      const LabeledRecord record =
          simulate_transition_record(scenario, derive_seed(spec.seed, rep));
      const std::size_t len = record.samples_per_window;
      std::vector<TimeSeries> windows;
      windows.reserve(n_windows);
      for (std::size_t w = 0; w < n_windows; ++w) {
        const auto first = record.series.x().begin() + static_cast<std::ptrdiff_t>(w * len);
        windows.emplace_back(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(len)),
                             record.series.dt());
      }
      const DissimilarityMatrix d = build_matrix(windows, Measure::total_variation, spec.config);
      const Dendrogram dend = agglomerate(d, spec.linkage);
      std::vector<std::vector<int>> labels_per_k;
      labels_per_k.reserve(spec.k_values.size());
      for (const int k : spec.k_values) labels_per_k.push_back(cut(dend, k).label);
      slot[rep] = std::move(labels_per_k);
    } catch (const std::exception&) {
      slot[rep].clear();
    }
  });

  std::size_t ok = 0;
  for (const std::vector<std::vector<int>>& labels_per_k : slot) {
    if (labels_per_k.empty()) continue;
    ++ok;
    for (std::size_t ki = 0; ki < spec.k_values.size(); ++ki) {
      std::vector<std::vector<std::size_t>>& counts = out.counts[spec.k_values[ki]];
      for (std::size_t w = 0; w < n_windows; ++w) {
        counts[w][static_cast<std::size_t>(labels_per_k[ki][w])] += 1;
      }
    }
  }
  out.failed_replications = spec.replications - ok;
  out.replications = ok;
  if (out.failed_replications * 100 > spec.replications) {
    throw std::runtime_error("transition run aborted: " + std::to_string(out.failed_replications) +
                             " of " + std::to_string(spec.replications) +
                             " replications failed (limit 1%)");
  }
  return out;
}

std::string emit_table(const ResultTable& table, TableFormat format) {
  if (format == TableFormat::csv) {
    std::string out = "experiment,length,k,measure,mean_sim,replications\n";
    for (const auto& r : table.rows) {
      out += std::to_string(r.experiment) + ',' + std::to_string(r.length) + ',' +
             std::to_string(r.k) + ',' + measure_name(r.measure) + ',' +
             fmt(r.mean_sim, 6) + ',' + std::to_string(r.replications) + '\n';
    }
    return out;
  }
  if (format == TableFormat::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"experiment", r.experiment},
                      {"length", r.length},
                      {"k", r.k},
                      {"measure", measure_name(r.measure)},
                      {"mean_sim", r.mean_sim},
                      {"replications", r.replications}});
    }
    return nlohmann::json{{"rows", std::move(rows)}}.dump(2) + "\n";
  }

  // Markdown: one row per (experiment, length, k), measures as columns in
  // canonical order.
  std::vector<Measure> columns;
  for (const Measure m : all_measures()) {
    for (const auto& r : table.rows) {
      if (r.measure == m) {
        columns.push_back(m);
        break;
      }
    }
  }
  struct Key {
    int experiment;
    std::size_t length;
    int k;
    bool operator<(const Key& o) const {
      return std::tie(experiment, length, k) < std::tie(o.experiment, o.length, o.k);
    }
  };
  std::map<Key, std::map<Measure, double>> grid;
  for (const auto& r : table.rows) grid[{r.experiment, r.length, r.k}][r.measure] = r.mean_sim;

  std::string out = "| exp | T | k |";
  for (const Measure m : columns) out += ' ' + measure_name(m) + " |";
  out += "\n|---|---|---|";
  for (std::size_t i = 0; i < columns.size(); ++i) out += "---|";
  out += '\n';
  for (const auto& [key, by_measure] : grid) {
    out += "| " + std::to_string(key.experiment) + " | " + std::to_string(key.length) +
           " | " + std::to_string(key.k) + " |";
    for (const Measure m : columns) {
      const auto it = by_measure.find(m);
      out += ' ' + (it == by_measure.end() ? std::string("-") : fmt(it->second, 3)) + " |";
    }
    out += '\n';
  }
  return out;
}

std::string emit_table(const TransitionCounts& counts, TableFormat format) {
  if (format == TableFormat::csv) {
    std::string out = "k,window,truth,cluster,count,replications\n";
    for (const auto& [k, table] : counts.counts) {
      for (std::size_t w = 0; w < table.size(); ++w) {
        for (std::size_t c = 0; c < table[w].size(); ++c) {
          out += std::to_string(k) + ',' + std::to_string(w) + ',' +
                 std::to_string(counts.truth[w]) + ',' + std::to_string(c) + ',' +
                 std::to_string(table[w][c]) + ',' + std::to_string(counts.replications) + '\n';
        }
      }
    }
    return out;
  }
  if (format == TableFormat::json) {
    nlohmann::json by_k = nlohmann::json::object();
    for (const auto& [k, table] : counts.counts) by_k[std::to_string(k)] = table;
    return nlohmann::json{{"n_windows", counts.n_windows},
                          {"replications", counts.replications},
                          {"truth", counts.truth},
                          {"counts", std::move(by_k)}}
               .dump(2) +
           "\n";
  }

  std::string out;
  for (const auto& [k, table] : counts.counts) {
    out += "### k = " + std::to_string(k) + "\n\n| window | truth |";
    for (int c = 0; c < k; ++c) out += " c" + std::to_string(c) + " |";
    out += "\n|---|---|";
    for (int c = 0; c < k; ++c) out += "---|";
    out += '\n';
    const double n = static_cast<double>(counts.replications);
    for (std::size_t w = 0; w < table.size(); ++w) {
      out += "| " + std::to_string(w) + " | " + std::to_string(counts.truth[w]) + " |";
      for (std::size_t c = 0; c < table[w].size(); ++c) {
        out += ' ' + fmt(static_cast<double>(table[w][c]) / n, 3) + " |";
      }
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

}  // namespace tvclust
