#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tvclust/cluster.hpp"
#include "tvclust/distance.hpp"
#include "tvclust/time_series.hpp"

namespace tvclust {

// Splits a record into non-overlapping windows of window_len_s seconds; a
// trailing partial window is dropped and its sample count reported.  Requires
// at least one whole window.
struct WindowSplit {
  std::vector<TimeSeries> windows;
  std::size_t dropped_samples = 0;
};
WindowSplit window_split(const TimeSeries& record, double window_len_s);

// Descriptive per-window statistics: hs = 4 * sqrt(sample variance), tp =
// 2*pi / argmax frequency of the one-sided physical spectral estimate.
struct WindowStats {
  double hs = 0.0;
  double tp = 0.0;
};
WindowStats summarize_window(const TimeSeries& window, std::size_t parzen_bandwidth = 100,
                             std::size_t grid_points = kDefaultGridPoints);

struct SegmentConfig {
  double window_len_s = 1800.0;
  Linkage linkage = Linkage::average;
  int k_min = 2;
  int k_max = 10;
  int forced_k = 0;  // 0 = choose k by Dunn index over [k_min, k_max]
  int min_run = 3;   // shortest label run reported as a stationary interval
  int revision_rounds = 1;
  std::size_t parzen_bandwidth = 100;
  std::size_t grid_points = kDefaultGridPoints;
};

struct WindowReport {
  double t_start = 0.0;
  double t_end = 0.0;
  double hs = 0.0;
  double tp = 0.0;
  int label = -1;  // -1 for degenerate windows
};

// Half-open window index range [first, last); stationary intervals carry the
// cluster label, transition intervals label -1.
struct IntervalReport {
  std::size_t first = 0;
  std::size_t last = 0;
  bool stationary = false;
  int label = -1;
  double t_start = 0.0;
  double t_end = 0.0;
};

struct SegmentationReport {
  std::vector<WindowReport> windows;
  std::vector<IntervalReport> intervals;       // tile [0, n_windows)
  std::vector<std::size_t> anomalies;          // single-window breaks absorbed into a run
  std::vector<std::size_t> degenerate_windows; // excluded from clustering
  std::vector<std::size_t> revised_windows;    // relabeled by silhouette revision
  std::size_t dropped_samples = 0;
  int k = 0;
  std::map<int, double> dunn_by_k;
  bool single_state = false;  // one run covers >= 90% of windows
  SegmentConfig config;
};

// Full pipeline: window, estimate spectra, TV matrix, agglomerate, pick k,
// cut, silhouette revision, then contiguity analysis.  Throws FormatError /
// DegenerateInput per the ingestion contract.
SegmentationReport segment(const TimeSeries& record, const SegmentConfig& cfg = {});

std::string report_to_csv(const SegmentationReport& report);

// Writes <dir>/segments.dat and <dir>/segments.gp: per-window hs/tp traces
// colored by cluster, ready for `gnuplot segments.gp`.
void emit_gnuplot(const SegmentationReport& report, const std::string& dir);

}  // namespace tvclust
