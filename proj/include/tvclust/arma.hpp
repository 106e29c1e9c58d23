#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tvclust/spectrum.hpp"
#include "tvclust/time_series.hpp"

namespace tvclust {

// ARIMA(p, d, q) with Gaussian innovations:
//   phi(B) (1-B)^d X_t = theta(B) e_t,   e_t ~ N(0, sigma2),
// where phi(z) = 1 - sum_i ar[i] z^{i+1} and theta(z) = 1 + sum_j ma[j] z^{j+1}.
// Equivalently the core recursion is
//   Y_t = sum_i ar[i] Y_{t-i-1} + e_t + sum_j ma[j] e_{t-j-1},
// and X is the d-fold cumulative sum of Y.  The AR part must be stationary
// (all reflection coefficients inside the unit disc); checked at construction.
class ArimaModel {
 public:
  ArimaModel() = default;  // white noise, sigma2 = 1
  ArimaModel(std::vector<double> ar, std::vector<double> ma, int d = 0, double sigma2 = 1.0);

  const std::vector<double>& ar() const { return ar_; }
  const std::vector<double>& ma() const { return ma_; }
  int d() const { return d_; }
  double sigma2() const { return sigma2_; }
  bool stationary() const { return d_ == 0; }

 private:
  std::vector<double> ar_;
  std::vector<double> ma_;
  int d_ = 0;
  double sigma2_ = 1.0;
};

// Simulates `length` samples (dt = 1).  A burn-in of max(200, 10*(p+q)) core
// samples is discarded before integration, so the output does not depend on
// start-up transients.  Deterministic in `seed`.
TimeSeries simulate_arima(const ArimaModel& model, std::size_t length, std::uint64_t seed);

// Spectral density of the stationary (d = 0) model,
//   f(lambda) = sigma2/(2 pi) * |theta(e^{-i lambda})|^2 / |phi(e^{-i lambda})|^2,
// on a strictly increasing grid in (0, pi].  Throws std::invalid_argument if
// d > 0 (no spectral density exists).
SpectralDensity arma_spectrum(const ArimaModel& model, const std::vector<double>& grid);

}  // namespace tvclust
