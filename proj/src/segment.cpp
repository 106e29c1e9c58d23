#include "tvclust/segment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "tvclust/errors.hpp"
#include "tvclust/estimate.hpp"
#include "tvclust/util.hpp"

namespace tvclust {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Run {
  int label = 0;
  std::size_t start = 0;
  std::size_t len = 0;
};

std::vector<Run> label_runs(const std::vector<int>& labels) {
  std::vector<Run> runs;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!runs.empty() && runs.back().label == labels[i]) {
      ++runs.back().len;
    } else {
      runs.push_back({labels[i], i, 1});
    }
  }
  return runs;
}

}  // namespace

WindowSplit window_split(const TimeSeries& record, double window_len_s) {
  if (!(window_len_s > 0.0)) throw std::invalid_argument("window length must be positive");
  const auto per_window =
      static_cast<std::size_t>(std::floor(window_len_s / record.dt() + 1e-9));
  if (per_window < 4) {
    throw DegenerateInput("window shorter than four samples at this rate");
  }
  const std::size_t n = record.size() / per_window;
  if (n < 1) throw DegenerateInput("record shorter than one whole window");

  WindowSplit out;
  out.dropped_samples = record.size() - n * per_window;
  out.windows.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    const auto first = record.x().begin() + static_cast<std::ptrdiff_t>(w * per_window);
    out.windows.emplace_back(
        std::vector<double>(first, first + static_cast<std::ptrdiff_t>(per_window)),
        record.dt());
  }
  return out;
}

WindowStats summarize_window(const TimeSeries& window, std::size_t parzen_bandwidth,
                             std::size_t grid_points) {
  const AcfEstimate a = acf(window, 0);  // throws DegenerateInput when constant
  const SpectralDensity s =
      to_physical(parzen_spectrum(window, parzen_bandwidth, grid_points), window.dt());
  const std::size_t peak = static_cast<std::size_t>(
      std::max_element(s.val().begin(), s.val().end()) - s.val().begin());
  WindowStats out;
  out.hs = 4.0 * std::sqrt(a.gamma0);
  out.tp = 2.0 * kPi / s.freq()[peak];
  return out;
}

SegmentationReport segment(const TimeSeries& record, const SegmentConfig& cfg) {
  SegmentationReport report;
  report.config = cfg;

  WindowSplit split = window_split(record, cfg.window_len_s);
  const std::size_t n = split.windows.size();
  if (n < 4) throw DegenerateInput("record splits into fewer than four windows");
  report.dropped_samples = split.dropped_samples;

  // Per-window descriptive stats; constant windows are excluded from
  // clustering and reported with label -1.
  report.windows.resize(n);
  std::vector<std::size_t> active;
  active.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    WindowReport& wr = report.windows[w];
    wr.t_start = static_cast<double>(w * split.windows[w].size()) * record.dt();
    wr.t_end = wr.t_start + static_cast<double>(split.windows[w].size()) * record.dt();
    try {
      const WindowStats stats =
          summarize_window(split.windows[w], cfg.parzen_bandwidth, cfg.grid_points);
      wr.hs = stats.hs;
      wr.tp = stats.tp;
      active.push_back(w);
    } catch (const DegenerateInput&) {
      report.degenerate_windows.push_back(w);
    }
  }
  if (active.size() < 2) {
    throw DegenerateInput("fewer than two non-constant windows");
  }

  std::vector<TimeSeries> items;
  items.reserve(active.size());
  for (const std::size_t w : active) items.push_back(split.windows[w]);

  MeasureConfig mc;
  mc.parzen_bandwidth = cfg.parzen_bandwidth;
  mc.grid_points = cfg.grid_points;
  const DissimilarityMatrix d = build_matrix(items, Measure::total_variation, mc);

  const int n_active = static_cast<int>(active.size());
  int k = 0;
  if (cfg.forced_k > 0) {
    if (cfg.forced_k < 2 || cfg.forced_k > n_active) {
      throw std::invalid_argument("forced k outside [2, number of windows]");
    }
    k = cfg.forced_k;
    const Dendrogram dend = agglomerate(d, cfg.linkage);
    report.dunn_by_k[k] = dunn_index(cut(dend, k), d);
  } else if (n_active == 2) {
    k = 2;
    const Dendrogram dend = agglomerate(d, cfg.linkage);
    report.dunn_by_k[k] = dunn_index(cut(dend, k), d);
  } else {
    const KSelection sel = select_k(d, cfg.k_min, cfg.k_max, cfg.linkage);
    k = sel.k;
    report.dunn_by_k = sel.dunn_by_k;
  }
  report.k = k;

  const Dendrogram dend = agglomerate(d, cfg.linkage);
  Partition part = cut(dend, k);
  if (cfg.revision_rounds > 0) {
    RevisionResult rev = silhouette_revision(part, d, cfg.revision_rounds);
    for (const std::size_t i : rev.moved) report.revised_windows.push_back(active[i]);
    std::sort(report.revised_windows.begin(), report.revised_windows.end());
    part = std::move(rev.partition);
  }

  std::vector<int> labels(n, -1);
  for (std::size_t i = 0; i < active.size(); ++i) labels[active[i]] = part.label[i];
  for (std::size_t w = 0; w < n; ++w) report.windows[w].label = labels[w];

  // Contiguity: absorb single-window breaks sitting between runs of one label,
  // then report runs of >= min_run windows as stationary intervals and tile the
  // rest as transitions.
  std::vector<int> smoothed = labels;
  {
    const std::vector<Run> runs = label_runs(labels);
    for (std::size_t r = 1; r + 1 < runs.size(); ++r) {
      if (runs[r].len == 1 && runs[r - 1].label == runs[r + 1].label &&
          runs[r - 1].label >= 0 && runs[r].label != runs[r - 1].label) {
        smoothed[runs[r].start] = runs[r - 1].label;
        report.anomalies.push_back(runs[r].start);
      }
    }
  }

  const std::vector<Run> runs = label_runs(smoothed);
  std::size_t covered_by_longest = 0;
  for (const Run& r : runs) {
    const bool stationary =
        r.label >= 0 && r.len >= static_cast<std::size_t>(std::max(cfg.min_run, 1));
    if (stationary) covered_by_longest = std::max(covered_by_longest, r.len);
    IntervalReport iv;
    iv.first = r.start;
    iv.last = r.start + r.len;
    iv.stationary = stationary;
    iv.label = stationary ? r.label : -1;
    if (!report.intervals.empty() && !stationary && !report.intervals.back().stationary) {
      report.intervals.back().last = iv.last;  // merge adjacent transition runs
    } else {
      report.intervals.push_back(iv);
    }
  }
  for (IntervalReport& iv : report.intervals) {
    iv.t_start = report.windows[iv.first].t_start;
    iv.t_end = report.windows[iv.last - 1].t_end;
  }
  report.single_state =
      static_cast<double>(covered_by_longest) >= 0.9 * static_cast<double>(n);
  return report;
}

std::string report_to_csv(const SegmentationReport& report) {
  std::string out = "window,t_start,t_end,hs,tp,label\n";
  for (std::size_t w = 0; w < report.windows.size(); ++w) {
    const WindowReport& r = report.windows[w];
    out += std::to_string(w) + ',' + fmt(r.t_start) + ',' + fmt(r.t_end) + ',' +
           fmt(r.hs) + ',' + fmt(r.tp) + ',' + std::to_string(r.label) + '\n';
  }
  out += "\ninterval,first_window,last_window,stationary,label,t_start,t_end\n";
  for (std::size_t i = 0; i < report.intervals.size(); ++i) {
    const IntervalReport& iv = report.intervals[i];
    out += std::to_string(i) + ',' + std::to_string(iv.first) + ',' +
           std::to_string(iv.last) + ',' + (iv.stationary ? "1" : "0") + ',' +
           std::to_string(iv.label) + ',' + fmt(iv.t_start) + ',' + fmt(iv.t_end) + '\n';
  }
  return out;
}

void emit_gnuplot(const SegmentationReport& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string dat_path = dir + "/segments.dat";
  const std::string gp_path = dir + "/segments.gp";

  std::ofstream dat(dat_path);
  if (!dat) throw std::runtime_error("cannot write " + dat_path);
  dat << "# window t_mid hs tp label\n";
  for (std::size_t w = 0; w < report.windows.size(); ++w) {
    const WindowReport& r = report.windows[w];
    dat << w << ' ' << 0.5 * (r.t_start + r.t_end) << ' ' << r.hs << ' ' << r.tp << ' '
        << r.label << '\n';
  }

  std::ofstream gp(gp_path);
  if (!gp) throw std::runtime_error("cannot write " + gp_path);
  gp << "set terminal pngcairo size 1200,800\n"
        "set output 'segments.png'\n"
        "set multiplot layout 2,1\n"
        "set xlabel 'time (s)'\n"
        "set ylabel 'hs (m)'\n"
        "set palette maxcolors 10\n"
        "plot 'segments.dat' using 2:3:5 with points pt 7 ps 1.5 palette title 'hs'\n"
        "set ylabel 'tp (s)'\n"
        "plot 'segments.dat' using 2:4:5 with points pt 7 ps 1.5 palette title 'tp'\n"
        "unset multiplot\n";
}

}  // namespace tvclust
