#include "tvclust/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "tvclust/errors.hpp"
#include "tvclust/fft.hpp"
#include "tvclust/util.hpp"

namespace tvclust {

namespace {

// Biased autocovariances gamma(0..max_lag) of the demeaned series.
std::vector<double> autocovariance(const std::vector<double>& x, std::size_t max_lag) {
  const std::size_t t = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(t);

  std::vector<double> c(x.size());
  for (std::size_t i = 0; i < t; ++i) c[i] = x[i] - mean;

  std::vector<double> gamma(max_lag + 1, 0.0);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i + k < t; ++i) acc += c[i] * c[i + k];
    gamma[k] = acc / static_cast<double>(t);
  }
  return gamma;
}

bool effectively_constant(double gamma0, const std::vector<double>& x) {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  const double scale = std::max(1.0, peak * peak);
  return gamma0 <= 1e-20 * scale;
}

}  // namespace

AcfEstimate acf(const TimeSeries& ts, std::size_t max_lag) {
  if (max_lag + 1 > ts.size()) {
    throw std::invalid_argument("acf: max_lag must be below the series length");
  }
  std::vector<double> gamma = autocovariance(ts.x(), max_lag);
  if (effectively_constant(gamma[0], ts.x())) {
    throw DegenerateInput("acf: constant series has no autocorrelation");
  }
  AcfEstimate out;
  out.gamma0 = gamma[0];
  out.rho.resize(max_lag + 1);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    out.rho[k] = std::clamp(gamma[k] / gamma[0], -1.0, 1.0);
  }
  return out;
}

Periodogram periodogram(const TimeSeries& ts) {
  const std::size_t t = ts.size();
  if (t < 4) throw std::invalid_argument("periodogram: need at least four samples");

  double mean = 0.0;
  for (double v : ts.x()) mean += v;
  mean /= static_cast<double>(t);

  std::vector<std::complex<double>> buf(t);
  double gamma0 = 0.0;
  for (std::size_t i = 0; i < t; ++i) {
    const double c = ts.x()[i] - mean;
    buf[i] = c;
    gamma0 += c * c;
  }
  gamma0 /= static_cast<double>(t);

  detail::dft(buf, -1);

  const std::size_t n = (t - 1) / 2;
  Periodogram out;
  out.length = t;
  out.gamma0 = gamma0;
  out.freq.resize(n);
  out.val.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    out.freq[k - 1] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(t);
    out.val[k - 1] = std::norm(buf[k]) / static_cast<double>(t);
  }
  return out;
}

double parzen_window(double u) {
  const double a = std::abs(u);
  if (a <= 0.5) return 1.0 - 6.0 * a * a + 6.0 * a * a * a;
  if (a <= 1.0) {
    const double b = 1.0 - a;
    return 2.0 * b * b * b;
  }
  return 0.0;
}

SpectralDensity parzen_spectrum(const TimeSeries& ts, std::size_t bandwidth,
                                std::size_t grid_points) {
  if (bandwidth == 0) throw std::invalid_argument("parzen_spectrum: zero bandwidth");
  const std::size_t m = std::min(bandwidth, ts.size() - 1);

  std::vector<double> gamma = autocovariance(ts.x(), m);
  if (effectively_constant(gamma[0], ts.x())) {
    throw DegenerateInput("parzen_spectrum: constant series has no spectrum");
  }

  std::vector<double> w(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    w[k] = parzen_window(static_cast<double>(k) / static_cast<double>(m));
  }

  std::vector<double> grid = default_lambda_grid(grid_points);
  std::vector<double> val(grid_points);
  for (std::size_t j = 0; j < grid_points; ++j) {
    const double lam = grid[j];
    // cos(k*lam) by the Chebyshev recurrence c_k = 2 cos(lam) c_{k-1} - c_{k-2}.
    const double c1 = std::cos(lam);
    double ckm1 = 1.0, ck = c1;
    double acc = w[0] * gamma[0];
    for (std::size_t k = 1; k <= m; ++k) {
      acc += 2.0 * w[k] * gamma[k] * ck;
      const double next = 2.0 * c1 * ck - ckm1;
      ckm1 = ck;
      ck = next;
    }
    val[j] = std::max(0.0, acc / (2.0 * kPi));
  }
  return SpectralDensity(std::move(grid), std::move(val), FreqUnit::rad_per_sample, false);
}

namespace {

std::vector<double> cepstral_from_grid(const std::vector<double>& freq,
                                       const std::vector<double>& raw, std::size_t p) {
  if (freq.size() < 4) throw std::invalid_argument("cepstral_coeffs: grid too small");
  std::vector<double> logv = floor_relative(raw);
  const double vmax = *std::max_element(logv.begin(), logv.end());
  if (!(vmax > 0.0)) throw DegenerateInput("cepstral_coeffs: all-zero spectrum");
  for (double& v : logv) v = std::log(v);

  // Map the grid affinely onto [0, 1].
  const double lo = freq.front(), hi = freq.back();
  std::vector<double> u(freq.size());
  for (std::size_t i = 0; i < freq.size(); ++i) u[i] = (freq[i] - lo) / (hi - lo);

  std::vector<double> theta(p + 1, 0.0);
  std::vector<double> ckm1(u.size()), ck(u.size()), base(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    ckm1[i] = 1.0;
    base[i] = std::cos(2.0 * kPi * u[i]);
    ck[i] = base[i];
  }
  std::vector<double> integrand(u.size());
  for (std::size_t k = 0; k <= p; ++k) {
    const std::vector<double>& c = (k == 0) ? ckm1 : ck;
    for (std::size_t i = 0; i < u.size(); ++i) integrand[i] = logv[i] * c[i];
    theta[k] = trapezoid(u, integrand);
    if (k >= 1) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        const double next = 2.0 * base[i] * ck[i] - ckm1[i];
        ckm1[i] = ck[i];
        ck[i] = next;
      }
    }
  }
  return theta;
}

}  // namespace

std::vector<double> cepstral_coeffs(const SpectralDensity& s, std::size_t p) {
  return cepstral_from_grid(s.freq(), s.val(), p);
}

std::vector<double> cepstral_coeffs(const Periodogram& pg, std::size_t p) {
  return cepstral_from_grid(pg.freq, pg.val, p);
}

std::vector<double> local_linear_smooth(const std::vector<double>& x,
                                        const std::vector<double>& y, double bandwidth) {
  if (x.size() != y.size() || x.size() < 3) {
    throw std::invalid_argument("local_linear_smooth: bad input sizes");
  }
  if (!(bandwidth > 0.0)) {
    throw std::invalid_argument("local_linear_smooth: bandwidth must be positive");
  }
  const std::size_t n = x.size();
  std::vector<double> out(n);
  std::size_t lo = 0, hi = 0;  // kernel support window, advanced monotonically
  for (std::size_t j = 0; j < n; ++j) {
    const double c = x[j];
    while (lo < n && x[lo] < c - bandwidth) ++lo;
    if (hi < lo) hi = lo;
    while (hi < n && x[hi] <= c + bandwidth) ++hi;

    double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double u = (x[i] - c) / bandwidth;
      const double k = 0.75 * (1.0 - u * u);
      if (k <= 0.0) continue;
      const double d = x[i] - c;
      s0 += k;
      s1 += k * d;
      s2 += k * d * d;
      t0 += k * y[i];
      t1 += k * d * y[i];
    }
    const double det = s0 * s2 - s1 * s1;
    if (det > 1e-300 * std::max(1.0, s2)) {
      out[j] = (s2 * t0 - s1 * t1) / det;
    } else {
      // Degenerate design (all mass at one point): fall back to the kernel mean.
      out[j] = s0 > 0.0 ? t0 / s0 : y[j];
    }
  }
  return out;
}

}  // namespace tvclust
