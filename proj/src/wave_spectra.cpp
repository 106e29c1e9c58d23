#include "tvclust/wave_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tvclust/util.hpp"

namespace tvclust {

namespace {

void check_omega_grid(const std::vector<double>& grid) {
  if (grid.size() < 2 || !(grid.front() > 0.0)) {
    throw std::invalid_argument("wave spectrum: omega grid must be positive and increasing");
  }
}

// Unnormalized JONSWAP shape with peak at omega_p and enhancement gamma.
double jonswap_shape(double omega, double omega_p, double gamma, double g) {
  const double r = omega_p / omega;
  const double pm = g * g / std::pow(omega, 5.0) * std::exp(-1.25 * std::pow(r, 4.0));
  const double s = omega <= omega_p ? 0.07 : 0.09;
  const double dev = (omega - omega_p) / (s * omega_p);
  const double bump = std::exp(-0.5 * dev * dev);
  return pm * std::pow(gamma, bump);
}

// One JONSWAP-form component rescaled to trapezoid mass (hs/4)^2 on `grid`.
std::vector<double> scaled_component(double hs, double tp, double gamma, double g,
                                     const std::vector<double>& grid) {
  const double omega_p = kPi / tp;
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    v[i] = jonswap_shape(grid[i], omega_p, gamma, g);
  }
  const double mass = trapezoid(grid, v);
  if (!(mass > 0.0)) {
    throw std::invalid_argument("wave spectrum: grid misses the spectral support");
  }
  const double target = (hs / 4.0) * (hs / 4.0);
  for (double& x : v) x *= target / mass;
  return v;
}

double wind_sea_enhancement(double hs, double tp, double g) {
  const double steepness = (2.0 * kPi / g) * hs / (tp * tp);
  return std::max(1.0, 35.0 * std::pow(steepness, 6.0 / 7.0));
}

}  // namespace

double JonswapParams::peak_enhancement() const {
  // Fitted form; depends only on r = tp/sqrt(hs):
  //   gamma = exp(3.484 * (1 - 0.1975 * (0.036 - 0.0056 r) * r^4)).
  const double r = tp / std::sqrt(hs);
  return std::exp(3.484 * (1.0 - 0.1975 * (0.036 - 0.0056 * r) * std::pow(r, 4.0)));
}

bool JonswapParams::in_validity_band() const {
  const double root = std::sqrt(hs);
  return tp >= 3.6 * root && tp <= 5.0 * root;
}

SpectralDensity jonswap_spectrum(const JonswapParams& p, const std::vector<double>& omega_grid) {
  if (!(p.hs > 0.0) || !(p.tp > 0.0) || !(p.g > 0.0)) {
    throw std::invalid_argument("jonswap_spectrum: hs, tp and g must be positive");
  }
  check_omega_grid(omega_grid);
  std::vector<double> v = scaled_component(p.hs, p.tp, p.peak_enhancement(), p.g, omega_grid);
  return SpectralDensity(omega_grid, std::move(v), FreqUnit::rad_per_sec, false);
}

SpectralDensity torsethaugen_spectrum(const TorsethaugenParams& p,
                                      const std::vector<double>& omega_grid) {
  if (!(p.hs > 0.0) || !(p.tp > 0.0) || !(p.g > 0.0)) {
    throw std::invalid_argument("torsethaugen_spectrum: hs, tp and g must be positive");
  }
  check_omega_grid(omega_grid);

  const double t_fully = 6.6 * std::cbrt(p.hs);
  double h1, t1, gamma1;  // primary
  double h2, t2;          // secondary (gamma = 1)
  if (p.tp <= t_fully) {
    // Wind-dominated: primary peak at tp, swell residue above t_fully.
    const double denom = t_fully - 2.0 * std::sqrt(p.hs);
    const double eps = denom > 0.0 ? std::clamp((t_fully - p.tp) / denom, 0.0, 1.0) : 1.0;
    const double share = 0.7 + 0.3 * std::exp(-std::pow(eps / 0.5, 2.0));
    h1 = share * p.hs;
    t1 = p.tp;
    gamma1 = wind_sea_enhancement(h1, t1, p.g);
    h2 = p.hs * std::sqrt(1.0 - share * share);
    t2 = t_fully + 2.0;
  } else {
    // Swell-dominated: primary peak at tp, fully developed wind sea below.
    const double eps = std::clamp((p.tp - t_fully) / (25.0 - t_fully), 0.0, 1.0);
    const double share = 0.6 + 0.4 * std::exp(-std::pow(eps / 0.3, 2.0));
    h1 = share * p.hs;
    t1 = p.tp;
    gamma1 = wind_sea_enhancement(p.hs, t_fully, p.g);
    h2 = p.hs * std::sqrt(1.0 - share * share);
    t2 = 6.6 * std::cbrt(std::max(h2, 1e-12));
  }

  std::vector<double> v = scaled_component(h1, t1, gamma1, p.g, omega_grid);
  if (h2 > 1e-9 * p.hs) {
    const std::vector<double> sec = scaled_component(h2, t2, 1.0, p.g, omega_grid);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += sec[i];
  }
  return SpectralDensity(omega_grid, std::move(v), FreqUnit::rad_per_sec, false);
}

}  // namespace tvclust
