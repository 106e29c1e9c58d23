// Command-line front end: simulate scenario records, run the clustering
// benchmarks, and segment sea-elevation records into stationary periods.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tvclust/bench.hpp"
#include "tvclust/errors.hpp"
#include "tvclust/io.hpp"
#include "tvclust/segment.hpp"
#include "tvclust/synthesis.hpp"

namespace {

using namespace tvclust;

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  if (name == "markdown" || name == "md") return TableFormat::markdown;
  throw CLI::ValidationError("--format", "expected csv, json or markdown");
}

Linkage parse_linkage(const std::string& name) {
  if (name == "complete") return Linkage::complete;
  if (name == "average") return Linkage::average;
  throw CLI::ValidationError("--linkage", "expected complete or average");
}

std::vector<Measure> parse_measures(const std::vector<std::string>& names) {
  std::vector<Measure> out;
  for (const std::string& name : names) {
    const std::optional<Measure> m = measure_from_name(name);
    if (!m) throw CLI::ValidationError("--measures", "unknown measure '" + name + "'");
    out.push_back(*m);
  }
  return out;
}

int run_simulate(const std::string& scenario_path, std::uint64_t seed,
                 const std::string& out_path, const std::string& labels_path) {
  const TransitionScenario scenario =
      scenario_path.empty() ? three_state_scenario() : scenario_from_json_file(scenario_path);
  const LabeledRecord record = simulate_transition_record(scenario, seed);
  write_out(out_path, series_to_csv(record.series));
  if (!labels_path.empty()) {
    std::string labels = "window,label,name\n";
    for (std::size_t w = 0; w < record.window_labels.size(); ++w) {
      const int l = record.window_labels[w];
      labels += std::to_string(w) + ',' + std::to_string(l) + ',' +
                record.label_names[static_cast<std::size_t>(l)] + '\n';
    }
    write_out(labels_path, labels);
  }
  std::cerr << "wrote " << record.series.size() << " samples ("
            << record.window_labels.size() << " windows of "
            << record.samples_per_window << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustering of time-series windows by spectral dissimilarity"};
  app.require_subcommand(1);

  // --- simulate -------------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "Simulate a piecewise-stationary record");
  std::string sim_scenario, sim_out = "record.csv", sim_labels;
  std::uint64_t sim_seed = 20260818;
  sim->add_option("--scenario", sim_scenario, "Scenario JSON (default: built-in 3-state demo)");
  sim->add_option("--seed", sim_seed, "RNG seed");
  sim->add_option("-o,--out", sim_out, "Output CSV (t,x); '-' for stdout");
  sim->add_option("--labels", sim_labels, "Also write per-window ground-truth labels CSV");

  // --- experiment -----------------------------------------------------------
  auto* exp = app.add_subcommand("experiment", "Run a clustering benchmark");
  std::string exp_id, exp_out, exp_format = "csv", exp_linkage;
  std::vector<std::size_t> exp_lengths;
  std::vector<int> exp_k;
  std::vector<std::string> exp_measures;
  std::size_t exp_reps = 0;
  std::uint64_t exp_seed = 20260818;
  exp->add_option("--id", exp_id, "Benchmark: 1, 2, 3 or transition")->required();
  exp->add_option("-T,--lengths", exp_lengths, "Series lengths (default: benchmark preset)");
  exp->add_option("-k", exp_k, "Cluster counts (default: benchmark preset)");
  exp->add_option("--measures", exp_measures,
                  "Measures: ACFU ACFG P NP LP LNP CEP TV L1 WDLS ISD");
  exp->add_option("-N,--replications", exp_reps, "Replications (default: benchmark preset)");
  exp->add_option("--linkage", exp_linkage, "complete (default) or average");
  exp->add_option("--seed", exp_seed, "RNG seed");
  exp->add_option("--format", exp_format, "csv (default), json or markdown");
  exp->add_option("-o,--out", exp_out, "Output file; default stdout");

  // --- segment ----------------------------------------------------------------
  auto* seg = app.add_subcommand("segment", "Segment a record into stationary periods");
  std::string seg_in, seg_out, seg_csv, seg_gnuplot, seg_linkage = "average";
  SegmentConfig seg_cfg;
  std::string seg_krange = "2:10";
  seg->add_option("-i,--in", seg_in, "Input CSV with header t,x")->required();
  seg->add_option("--window-s", seg_cfg.window_len_s, "Window length in seconds (default 1800)");
  seg->add_option("--linkage", seg_linkage, "average (default) or complete");
  seg->add_option("--k-range", seg_krange, "k selection range, e.g. 2:10");
  seg->add_option("--forced-k", seg_cfg.forced_k, "Skip selection and cut at this k");
  seg->add_option("--min-run", seg_cfg.min_run,
                  "Shortest run reported as stationary (default 3)");
  seg->add_option("--revision-rounds", seg_cfg.revision_rounds,
                  "Silhouette revision rounds (default 1)");
  seg->add_option("--bandwidth", seg_cfg.parzen_bandwidth,
                  "Lag-window bandwidth M (default 100)");
  seg->add_option("--grid", seg_cfg.grid_points, "Spectral grid points (default 513)");
  seg->add_option("-o,--out", seg_out, "Report JSON; default stdout");
  seg->add_option("--csv", seg_csv, "Also write the per-window/interval CSV report");
  seg->add_option("--emit-gnuplot", seg_gnuplot, "Write segments.dat/.gp into this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      return run_simulate(sim_scenario, sim_seed, sim_out, sim_labels);
    }

    if (exp->parsed()) {
      const TableFormat format = parse_format(exp_format);
      if (exp_id == "transition") {
        TransitionSpec spec;
        if (exp_reps > 0) spec.replications = exp_reps;
        if (!exp_k.empty()) spec.k_values = exp_k;
        if (!exp_linkage.empty()) spec.linkage = parse_linkage(exp_linkage);
        spec.seed = exp_seed;
        write_out(exp_out, emit_table(run_transition(spec), format));
        return 0;
      }
      ExperimentSpec spec;
      try {
        spec.id = std::stoi(exp_id);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--id", "expected 1, 2, 3 or transition");
      }
      spec.lengths = exp_lengths;
      spec.k_values = exp_k;
      spec.measures = parse_measures(exp_measures);
      spec.replications = exp_reps;
      if (!exp_linkage.empty()) spec.linkage = parse_linkage(exp_linkage);
      spec.seed = exp_seed;
      write_out(exp_out, emit_table(run_experiment(spec), format));
      return 0;
    }

    // segment
    {
      const auto colon = seg_krange.find(':');
      if (colon == std::string::npos) {
        throw CLI::ValidationError("--k-range", "expected lo:hi, e.g. 2:10");
      }
      try {
        seg_cfg.k_min = std::stoi(seg_krange.substr(0, colon));
        seg_cfg.k_max = std::stoi(seg_krange.substr(colon + 1));
      } catch (const std::exception&) {
        throw CLI::ValidationError("--k-range", "expected lo:hi, e.g. 2:10");
      }
      seg_cfg.linkage = parse_linkage(seg_linkage);

      const TimeSeries record = series_from_csv_file(seg_in);
      const SegmentationReport report = segment(record, seg_cfg);
      write_out(seg_out, report_to_json(report).dump(2) + "\n");
      if (!seg_csv.empty()) write_out(seg_csv, report_to_csv(report));
      if (!seg_gnuplot.empty()) emit_gnuplot(report, seg_gnuplot);

      std::cerr << report.windows.size() << " windows -> k = " << report.k << ", "
                << report.intervals.size() << " intervals"
                << (report.single_state ? " (single state)" : "") << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
