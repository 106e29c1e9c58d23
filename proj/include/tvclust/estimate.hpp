#pragma once

#include <cstddef>
#include <vector>

#include "tvclust/spectrum.hpp"
#include "tvclust/time_series.hpp"

namespace tvclust {

// Sample autocorrelation with the biased (divide-by-T) autocovariance
// convention; rho[0] == 1.  gamma0 is the biased sample variance.
struct AcfEstimate {
  std::vector<double> rho;  // lags 0..max_lag
  double gamma0 = 0.0;
};

// Throws std::invalid_argument if max_lag >= length, DegenerateInput if the
// series is constant.
AcfEstimate acf(const TimeSeries& ts, std::size_t max_lag);

// Raw periodogram I(lambda_k) = |sum_t x_t e^{-i lambda_k t}|^2 / T at the
// Fourier frequencies lambda_k = 2*pi*k/T, k = 1..floor((T-1)/2), with the
// sample mean removed first.  Requires T >= 4.
struct Periodogram {
  std::vector<double> freq;  // rad/sample, increasing
  std::vector<double> val;
  double gamma0 = 0.0;       // biased sample variance
  std::size_t length = 0;    // T
};

Periodogram periodogram(const TimeSeries& ts);

// Parzen lag window, w(u) = 1 - 6u^2 + 6|u|^3 for |u| <= 1/2,
// 2(1-|u|)^3 for 1/2 < |u| <= 1, else 0.
double parzen_window(double u);

// Parzen lag-window spectral estimate
//   f(lambda) = (1/2pi) * sum_{|k|<=M} w(k/M) gamma(k) cos(k lambda)
// evaluated on `grid_points` uniform frequencies in (0, pi] (rad/sample) and
// clipped at zero from below.  The effective bandwidth is min(M, T-1).  The
// result is not normalized; use to_physical() for one-sided physical units.
SpectralDensity parzen_spectrum(const TimeSeries& ts, std::size_t bandwidth = 100,
                                std::size_t grid_points = kDefaultGridPoints);

// Cepstral-style coefficients theta_0..theta_p of log f against cos(2*pi*k*u),
// where u in [0,1] is the spectrum's grid mapped affinely.  Ordinates are
// floored at 1e-12 * max before the log.  Trapezoid quadrature.
std::vector<double> cepstral_coeffs(const SpectralDensity& s, std::size_t p = 128);
std::vector<double> cepstral_coeffs(const Periodogram& pg, std::size_t p = 128);

// Local-linear least-squares smoother with Epanechnikov kernel, evaluated at
// the design points themselves.  Used for smoothed (log-)periodograms.
std::vector<double> local_linear_smooth(const std::vector<double>& x,
                                        const std::vector<double>& y, double bandwidth);

}  // namespace tvclust
