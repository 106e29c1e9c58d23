#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tvclust/estimate.hpp"
#include "tvclust/spectrum.hpp"
#include "tvclust/time_series.hpp"
#include "tvclust/util.hpp"

namespace tvclust {

// Dissimilarity measures between stationary series / spectra.
enum class Measure {
  acf_uniform,       // ACFU: sqrt(sum (rho_i - rho'_i)^2), lags 1..L
  acf_geometric,     // ACFG: geometric weights p(1-p)^i
  pgram,             // P:    (1/n) sqrt(sum (I - I')^2)
  pgram_norm,        // NP:   same on I/gamma0
  log_pgram,         // LP:   same on log I
  log_pgram_norm,    // LNP:  same on log(I/gamma0)
  cepstral,          // CEP:  sum_k (theta_k - theta'_k)^2, k = 0..p
  total_variation,   // TV:   1 - integral min(f, g), f and g normalized
  l1_log,            // L1:   (1/2) integral |log f - log g|, f and g normalized
  w_dls,             // WDLS: divergence of smoothed-periodogram ratios
  isd,               // ISD:  integral (m - m')^2, smoothed log-periodograms
};

std::string measure_name(Measure m);
std::optional<Measure> measure_from_name(std::string_view name);
const std::vector<Measure>& all_measures();

struct MeasureConfig {
  std::size_t acf_max_lag = 25;
  double acf_geo_p = 0.05;
  std::size_t cep_p = 128;
  double w_alpha = 0.5;                    // in (0, 1)
  double smooth_bandwidth = 0.1 * kPi;     // rad, Epanechnikov local-linear
  std::size_t parzen_bandwidth = 100;
  std::size_t grid_points = kDefaultGridPoints;
  // Instrumentation: called once per evaluated pair (i < j) by build_matrix.
  std::function<void(std::size_t, std::size_t)> on_pair;
};

// --- pairwise measures -----------------------------------------------------

// Total variation distance between normalized densities on identical grids:
// 1 - integral min(f, g), clamped into [0, 1].  Equals (1/2) integral |f - g|.
double tv_distance(const SpectralDensity& f, const SpectralDensity& g);

// Kullback-Leibler divergence integral f log(f/g); +infinity when f > 0 on a
// set where g = 0.  Both inputs normalized, identical grids.
double kl_divergence(const SpectralDensity& f, const SpectralDensity& g);

// (1/2) integral |log f - log g| on normalized densities, identical grids,
// ordinates floored at 1e-12 * max before the logs.
double l1_log_distance(const SpectralDensity& f, const SpectralDensity& g);

double acf_distance_uniform(const AcfEstimate& a, const AcfEstimate& b);
double acf_distance_geometric(const AcfEstimate& a, const AcfEstimate& b, double p = 0.05);

enum class PgramVariant { plain, normalized, log_plain, log_normalized };
double periodogram_distance(const Periodogram& a, const Periodogram& b, PgramVariant v);

// Squared Euclidean distance of cepstral coefficient vectors (theta_0 included).
double cepstral_distance(const std::vector<double>& a, const std::vector<double>& b);

// Divergence d_W = (1/4pi) integral_{-pi}^{pi} Wt(fx/fy) dlambda with
// Wt(x) = W(x) + W(1/x), W(x) = log(alpha x + 1 - alpha) - alpha log x,
// evaluated on local-linear smoothed periodograms (ratios floored > 0).
double w_disparity(const Periodogram& a, const Periodogram& b, double alpha = 0.5,
                   double bandwidth = 0.1 * kPi);
double w_divergence_term(double ratio, double alpha);  // Wt(ratio); exposed for tests

// Integrated squared difference of smoothed log-periodograms.
double isd_distance(const Periodogram& a, const Periodogram& b,
                    double bandwidth = 0.1 * kPi);

// --- matrices ----------------------------------------------------------------

// Symmetric, zero-diagonal, nonnegative, finite; validated at construction.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix() = default;
  DissimilarityMatrix(std::vector<std::string> ids, std::vector<double> values,
                      std::string measure);

  std::size_t n() const { return ids_.size(); }
  double at(std::size_t i, std::size_t j) const { return d_[i * n() + j]; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<double>& values() const { return d_; }
  const std::string& measure() const { return measure_; }

 private:
  std::vector<std::string> ids_;
  std::vector<double> d_;
  std::string measure_;
};

// Evaluates `measure` over every unordered pair.  Per-item features (ACFs,
// periodograms, spectra, cepstra, smoothed periodograms) are computed once per
// item; pair evaluations may run in parallel with bit-identical results.
// Errors are rethrown with the offending item or pair index attached.
DissimilarityMatrix build_matrix(const std::vector<TimeSeries>& items, Measure measure,
                                 const MeasureConfig& cfg = {});

// Spectral-domain entry point for measures over densities (TV, L1, CEP).
// Inputs must share one grid; they are normalized internally where required.
DissimilarityMatrix build_matrix(const std::vector<SpectralDensity>& items, Measure measure,
                                 const MeasureConfig& cfg = {});

}  // namespace tvclust
