#include "tvclust/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tvclust/errors.hpp"

namespace tvclust {

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t row) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw FormatError("row " + std::to_string(row) + ": cannot parse number '" + s + "'");
  }
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

}  // namespace

std::string series_to_csv(const TimeSeries& ts, double t0) {
  std::string out = "t,x\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out += fmt_double(t0 + ts.dt() * static_cast<double>(i));
    out += ',';
    out += fmt_double(ts.x()[i]);
    out += '\n';
  }
  return out;
}

TimeSeries series_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty input");
  if (trim(line) != "t,x") {
    throw FormatError("row 1: expected header 't,x', got '" + trim(line) + "'");
  }
  std::vector<double> t, x;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(trimmed);
    if (fields.size() != 2) {
      throw FormatError("row " + std::to_string(row) + ": expected 2 fields, got " +
                        std::to_string(fields.size()));
    }
    const double ti = parse_double(fields[0], row);
    const double xi = parse_double(fields[1], row);
    if (std::isnan(xi) || std::isnan(ti) || std::isinf(xi) || std::isinf(ti)) {
      throw FormatError("row " + std::to_string(row) + ": non-finite value");
    }
    t.push_back(ti);
    x.push_back(xi);
  }
  if (x.size() < 2) throw DegenerateInput("record has fewer than two samples");

  const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(dt > 0.0)) throw FormatError("time column is not increasing");
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double step = t[i] - t[i - 1];
    if (std::abs(step - dt) > 1e-6 * dt) {
      throw FormatError("row " + std::to_string(i + 2) +
                        ": nonuniform sampling (step " + fmt_double(step) + " vs " +
                        fmt_double(dt) + ")");
    }
  }
  return TimeSeries(std::move(x), dt);
}

TimeSeries series_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return series_from_csv(in);
}

std::string spectrum_to_csv(const SpectralDensity& s) {
  std::string out = "# unit: " + freq_unit_name(s.unit()) +
                    (s.normalized() ? ", normalized\n" : "\n");
  out += "freq,value\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += fmt_double(s.freq()[i]);
    out += ',';
    out += fmt_double(s.val()[i]);
    out += '\n';
  }
  return out;
}

nlohmann::json spectrum_to_json(const SpectralDensity& s) {
  return nlohmann::json{{"unit", freq_unit_name(s.unit())},
                        {"normalized", s.normalized()},
                        {"freq", s.freq()},
                        {"value", s.val()}};
}

SpectralDensity spectrum_from_json(const nlohmann::json& j) {
  const std::string unit = j.at("unit").get<std::string>();
  FreqUnit u;
  if (unit == freq_unit_name(FreqUnit::rad_per_sample)) {
    u = FreqUnit::rad_per_sample;
  } else if (unit == freq_unit_name(FreqUnit::rad_per_sec)) {
    u = FreqUnit::rad_per_sec;
  } else {
    throw FormatError("spectrum json: unknown unit '" + unit + "'");
  }
  return SpectralDensity(j.at("freq").get<std::vector<double>>(),
                         j.at("value").get<std::vector<double>>(), u,
                         j.at("normalized").get<bool>());
}

std::string matrix_to_csv(const DissimilarityMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    out += (i ? "," : "") + m.ids()[i];
  }
  out += '\n';
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) out += ',';
      out += fmt_double(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

nlohmann::json matrix_to_json(const DissimilarityMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"measure", m.measure()}, {"ids", m.ids()}, {"d", std::move(rows)}};
}

DissimilarityMatrix matrix_from_json(const nlohmann::json& j) {
  const auto ids = j.at("ids").get<std::vector<std::string>>();
  const auto rows = j.at("d");
  std::vector<double> values;
  values.reserve(ids.size() * ids.size());
  for (const auto& row : rows) {
    for (const auto& v : row) values.push_back(v.get<double>());
  }
  return DissimilarityMatrix(ids, std::move(values), j.value("measure", std::string("?")));
}

nlohmann::json dendrogram_to_json(const Dendrogram& d) {
  nlohmann::json merges = nlohmann::json::array();
  for (const auto& m : d.merges) {
    merges.push_back(nlohmann::json::array({m.a, m.b, m.height}));
  }
  return nlohmann::json{{"n_leaves", d.n_leaves}, {"merges", std::move(merges)}};
}

std::string partition_to_csv(const Partition& p) {
  std::string out = "item,label\n";
  for (std::size_t i = 0; i < p.label.size(); ++i) {
    out += std::to_string(i) + ',' + std::to_string(p.label[i]) + '\n';
  }
  return out;
}

nlohmann::json scenario_to_json(const TransitionScenario& sc) {
  nlohmann::json phases = nlohmann::json::array();
  for (const PhaseSpec& ph : sc.phases) {
    nlohmann::json p;
    switch (ph.family) {
      case PhaseSpec::Family::jonswap: p["family"] = "jonswap"; break;
      case PhaseSpec::Family::torsethaugen: p["family"] = "torsethaugen"; break;
      case PhaseSpec::Family::arma: p["family"] = "arma"; break;
    }
    if (ph.family == PhaseSpec::Family::arma) {
      p["ar"] = ph.arma.ar();
      p["ma"] = ph.arma.ma();
      p["sigma2"] = ph.arma.sigma2();
    } else {
      p["hs"] = ph.hs;
      p["tp"] = ph.tp;
    }
    p["duration_s"] = ph.duration_s;
    phases.push_back(std::move(p));
  }
  return nlohmann::json{{"phases", std::move(phases)},
                        {"transitions", sc.transition_s},
                        {"dt", sc.dt},
                        {"window_len_s", sc.window_len_s}};
}

TransitionScenario scenario_from_json(const nlohmann::json& j) {
  TransitionScenario sc;
  try {
    sc.dt = j.at("dt").get<double>();
    sc.window_len_s = j.at("window_len_s").get<double>();
    sc.transition_s = j.value("transitions", std::vector<double>{});
    for (const auto& p : j.at("phases")) {
      PhaseSpec ph;
      const std::string family = p.at("family").get<std::string>();
      if (family == "jonswap") {
        ph.family = PhaseSpec::Family::jonswap;
        ph.hs = p.at("hs").get<double>();
        ph.tp = p.at("tp").get<double>();
      } else if (family == "torsethaugen") {
        ph.family = PhaseSpec::Family::torsethaugen;
        ph.hs = p.at("hs").get<double>();
        ph.tp = p.at("tp").get<double>();
      } else if (family == "arma") {
        ph.family = PhaseSpec::Family::arma;
        ph.arma = ArimaModel(p.value("ar", std::vector<double>{}),
                             p.value("ma", std::vector<double>{}), 0,
                             p.value("sigma2", 1.0));
      } else {
        throw FormatError("scenario: unknown family '" + family + "'");
      }
      ph.duration_s = p.at("duration_s").get<double>();
      sc.phases.push_back(std::move(ph));
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("scenario json: ") + e.what());
  }
  return sc;
}

TransitionScenario scenario_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("scenario json: ") + e.what());
  }
  return scenario_from_json(j);
}

nlohmann::json report_to_json(const SegmentationReport& r) {
  nlohmann::json windows = nlohmann::json::array();
  for (const auto& w : r.windows) {
    windows.push_back({{"t_start", w.t_start},
                       {"t_end", w.t_end},
                       {"hs", w.hs},
                       {"tp", w.tp},
                       {"label", w.label}});
  }
  nlohmann::json intervals = nlohmann::json::array();
  for (const auto& iv : r.intervals) {
    intervals.push_back({{"first_window", iv.first},
                         {"last_window", iv.last},
                         {"stationary", iv.stationary},
                         {"label", iv.label},
                         {"t_start", iv.t_start},
                         {"t_end", iv.t_end}});
  }
  nlohmann::json dunn = nlohmann::json::object();
  for (const auto& [k, v] : r.dunn_by_k) dunn[std::to_string(k)] = v;
  return nlohmann::json{{"windows", std::move(windows)},
                        {"intervals", std::move(intervals)},
                        {"anomalies", r.anomalies},
                        {"degenerate_windows", r.degenerate_windows},
                        {"revised_windows", r.revised_windows},
                        {"dropped_samples", r.dropped_samples},
                        {"k", r.k},
                        {"dunn_by_k", std::move(dunn)},
                        {"single_state", r.single_state},
                        {"config",
                         {{"window_len_s", r.config.window_len_s},
                          {"linkage", r.config.linkage == Linkage::average ? "average" : "complete"},
                          {"k_min", r.config.k_min},
                          {"k_max", r.config.k_max},
                          {"forced_k", r.config.forced_k},
                          {"min_run", r.config.min_run},
                          {"revision_rounds", r.config.revision_rounds},
                          {"parzen_bandwidth", r.config.parzen_bandwidth},
                          {"grid_points", r.config.grid_points}}}};
}

}  // namespace tvclust
