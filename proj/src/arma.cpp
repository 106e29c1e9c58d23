#include "tvclust/arma.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "tvclust/rng.hpp"
#include "tvclust/util.hpp"

namespace tvclust {

namespace {

// Schur-Cohn stationarity test via the Levinson step-down: with the AR
// polynomial written as 1 + sum_i a_i z^i (a_i = -ar[i-1]), the process is
// stationary iff every reflection coefficient has magnitude below one.
bool ar_stationary(const std::vector<double>& ar) {
  std::vector<double> a(ar.size());
  for (std::size_t i = 0; i < ar.size(); ++i) a[i] = -ar[i];
  for (std::size_t m = a.size(); m >= 1; --m) {
    const double k = a[m - 1];
    if (!(std::abs(k) < 1.0 - 1e-12)) return false;
    if (m == 1) break;
    std::vector<double> next(m - 1);
    const double denom = 1.0 - k * k;
    for (std::size_t i = 0; i < m - 1; ++i) {
      next[i] = (a[i] - k * a[m - 2 - i]) / denom;
    }
    a = std::move(next);
  }
  return true;
}

}  // namespace

ArimaModel::ArimaModel(std::vector<double> ar, std::vector<double> ma, int d, double sigma2)
    : ar_(std::move(ar)), ma_(std::move(ma)), d_(d), sigma2_(sigma2) {
  if (d_ < 0) throw std::invalid_argument("ArimaModel: d must be nonnegative");
  if (!(sigma2_ > 0.0) || !std::isfinite(sigma2_)) {
    throw std::invalid_argument("ArimaModel: sigma2 must be positive and finite");
  }
  for (double c : ar_) {
    if (!std::isfinite(c)) throw std::invalid_argument("ArimaModel: non-finite AR coefficient");
  }
  for (double c : ma_) {
    if (!std::isfinite(c)) throw std::invalid_argument("ArimaModel: non-finite MA coefficient");
  }
  if (!ar_.empty() && !ar_stationary(ar_)) {
    throw std::invalid_argument("ArimaModel: AR part is not stationary");
  }
}

TimeSeries simulate_arima(const ArimaModel& model, std::size_t length, std::uint64_t seed) {
  if (length < 2) throw std::invalid_argument("simulate_arima: length must be >= 2");
  const std::size_t p = model.ar().size();
  const std::size_t q = model.ma().size();
  const std::size_t burn = std::max<std::size_t>(200, 10 * (p + q));
  const std::size_t total = burn + length;

  Rng rng(seed);
  const double sd = std::sqrt(model.sigma2());

  std::vector<double> eps(total), y(total);
  for (std::size_t t = 0; t < total; ++t) eps[t] = sd * rng.normal();
  for (std::size_t t = 0; t < total; ++t) {
    double v = eps[t];
    for (std::size_t j = 0; j < q && j < t; ++j) v += model.ma()[j] * eps[t - j - 1];
    for (std::size_t i = 0; i < p && i < t; ++i) v += model.ar()[i] * y[t - i - 1];
    y[t] = v;
  }

  std::vector<double> x(y.begin() + static_cast<std::ptrdiff_t>(burn), y.end());
  for (int rep = 0; rep < model.d(); ++rep) {
    double acc = 0.0;
    for (double& v : x) {
      acc += v;
      v = acc;
    }
  }
  return TimeSeries(std::move(x), 1.0);
}

SpectralDensity arma_spectrum(const ArimaModel& model, const std::vector<double>& grid) {
  if (model.d() != 0) {
    throw std::invalid_argument("arma_spectrum: no spectral density exists for d > 0");
  }
  if (grid.size() < 2 || !(grid.front() > 0.0) || grid.back() > kPi + 1e-12) {
    throw std::invalid_argument("arma_spectrum: grid must lie in (0, pi]");
  }
  std::vector<double> val(grid.size());
  const double scale = model.sigma2() / (2.0 * kPi);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::complex<double> z = std::polar(1.0, -grid[i]);  // e^{-i lambda}
    std::complex<double> zk = 1.0;
    std::complex<double> num = 1.0, den = 1.0;
    const std::size_t depth = std::max(model.ar().size(), model.ma().size());
    for (std::size_t k = 0; k < depth; ++k) {
      zk *= z;
      if (k < model.ma().size()) num += model.ma()[k] * zk;
      if (k < model.ar().size()) den -= model.ar()[k] * zk;
    }
    val[i] = scale * std::norm(num) / std::norm(den);
  }
  return SpectralDensity(grid, std::move(val), FreqUnit::rad_per_sample, false);
}

}  // namespace tvclust
