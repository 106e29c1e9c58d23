#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "tvclust/cluster.hpp"
#include "tvclust/distance.hpp"
#include "tvclust/segment.hpp"
#include "tvclust/spectrum.hpp"
#include "tvclust/synthesis.hpp"
#include "tvclust/time_series.hpp"

namespace tvclust {

// ---- time series -----------------------------------------------------------
// CSV schema: header "t,x", one row per sample, t in seconds.

std::string series_to_csv(const TimeSeries& ts, double t0 = 0.0);

// Parses a t,x record.  Throws FormatError (naming the offending row) on bad
// headers, unparseable fields, NaN samples or nonuniform sampling (relative
// tolerance 1e-6), DegenerateInput when fewer than two samples remain.
TimeSeries series_from_csv(std::istream& in);
TimeSeries series_from_csv_file(const std::string& path);

// ---- spectra ---------------------------------------------------------------

// CSV: a "# unit: ..." comment line, then "freq,value" rows.
std::string spectrum_to_csv(const SpectralDensity& s);

// JSON round-trips bit-exactly (doubles serialized losslessly).
nlohmann::json spectrum_to_json(const SpectralDensity& s);
SpectralDensity spectrum_from_json(const nlohmann::json& j);

// ---- dissimilarity matrices -------------------------------------------------

// CSV: header row of item ids, then the square matrix.
std::string matrix_to_csv(const DissimilarityMatrix& m);
nlohmann::json matrix_to_json(const DissimilarityMatrix& m);
DissimilarityMatrix matrix_from_json(const nlohmann::json& j);

// ---- clustering artifacts ----------------------------------------------------

nlohmann::json dendrogram_to_json(const Dendrogram& d);
std::string partition_to_csv(const Partition& p);  // "item,label"

// ---- scenarios ----------------------------------------------------------------
// JSON schema: {"phases": [{"family": "jonswap"|"torsethaugen"|"arma",
//   "hs":, "tp":, "ar":[], "ma":[], "sigma2":, "duration_s":}, ...],
//   "transitions": [s, ...], "dt": s, "window_len_s": s}

nlohmann::json scenario_to_json(const TransitionScenario& sc);
TransitionScenario scenario_from_json(const nlohmann::json& j);
TransitionScenario scenario_from_json_file(const std::string& path);

// ---- segmentation reports ------------------------------------------------------

nlohmann::json report_to_json(const SegmentationReport& r);

}  // namespace tvclust
