#include "tvclust/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tvclust/errors.hpp"
#include "tvclust/util.hpp"

namespace tvclust {

std::string freq_unit_name(FreqUnit unit) {
  switch (unit) {
    case FreqUnit::rad_per_sample: return "rad/sample";
    case FreqUnit::rad_per_sec: return "rad/s";
  }
  return "?";
}

SpectralDensity::SpectralDensity(std::vector<double> freq, std::vector<double> val,
                                 FreqUnit unit, bool normalized)
    : freq_(std::move(freq)), val_(std::move(val)), unit_(unit), normalized_(normalized) {
  if (freq_.size() != val_.size()) {
    throw std::invalid_argument("SpectralDensity: grid/value size mismatch");
  }
  if (freq_.size() < 2) {
    throw std::invalid_argument("SpectralDensity: need at least two grid points");
  }
  for (std::size_t i = 0; i < freq_.size(); ++i) {
    if (!std::isfinite(freq_[i]) || (i > 0 && freq_[i] <= freq_[i - 1])) {
      throw std::invalid_argument("SpectralDensity: grid must be strictly increasing, index " +
                                  std::to_string(i));
    }
    if (!std::isfinite(val_[i]) || val_[i] < 0.0) {
      throw std::invalid_argument(
          "SpectralDensity: values must be finite and nonnegative, index " +
          std::to_string(i));
    }
  }
}

double SpectralDensity::mass() const { return trapezoid(freq_, val_); }

std::vector<double> uniform_grid(double lo_exclusive, double hi_inclusive, std::size_t n) {
  if (n < 2 || !(hi_inclusive > lo_exclusive)) {
    throw std::invalid_argument("uniform_grid: bad range or count");
  }
  std::vector<double> g(n);
  const double step = (hi_inclusive - lo_exclusive) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = lo_exclusive + step * static_cast<double>(i + 1);
  }
  g.back() = hi_inclusive;
  return g;
}

std::vector<double> default_lambda_grid(std::size_t n) { return uniform_grid(0.0, kPi, n); }

std::vector<double> default_omega_grid(double dt, std::size_t n) {
  if (!(dt > 0.0)) throw std::invalid_argument("default_omega_grid: dt must be positive");
  return uniform_grid(0.0, kPi / dt, n);
}

SpectralDensity normalize(const SpectralDensity& s) {
  const double m = s.mass();
  if (!(m > 0.0)) {
    throw DegenerateInput("normalize: spectrum has zero mass");
  }
  std::vector<double> v = s.val();
  for (double& x : v) x /= m;
  return SpectralDensity(s.freq(), std::move(v), s.unit(), true);
}

SpectralDensity regrid(const SpectralDensity& s, const std::vector<double>& target_grid) {
  if (target_grid.size() < 2) {
    throw std::invalid_argument("regrid: target grid too small");
  }
  if (target_grid.front() < s.freq().front() || target_grid.back() > s.freq().back()) {
    throw std::invalid_argument("regrid: target grid requires extrapolation");
  }
  std::vector<double> v(target_grid.size());
  for (std::size_t i = 0; i < target_grid.size(); ++i) {
    v[i] = interp_linear(s.freq(), s.val(), target_grid[i]);
  }
  SpectralDensity out(target_grid, std::move(v), s.unit(), false);
  return s.normalized() ? normalize(out) : out;
}

SpectralDensity to_physical(const SpectralDensity& s, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("to_physical: dt must be positive");
  if (s.unit() != FreqUnit::rad_per_sample) {
    throw std::invalid_argument("to_physical: input must be in rad/sample");
  }
  std::vector<double> freq(s.size()), val(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    freq[i] = s.freq()[i] / dt;
    val[i] = 2.0 * dt * s.val()[i];
  }
  SpectralDensity out(std::move(freq), std::move(val), FreqUnit::rad_per_sec, false);
  return s.normalized() ? normalize(out) : out;
}

}  // namespace tvclust
