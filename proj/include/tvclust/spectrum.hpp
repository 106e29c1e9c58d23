#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace tvclust {

enum class FreqUnit {
  rad_per_sample,  // angular frequency lambda in (0, pi], unit sampling rate
  rad_per_sec,     // physical angular frequency omega in (0, pi/dt]
};

std::string freq_unit_name(FreqUnit unit);

// One-sided spectral density sampled on a strictly increasing frequency grid.
// Values are nonnegative and finite; `normalized` marks unit trapezoid mass.
// Validated at construction.
class SpectralDensity {
 public:
  SpectralDensity() = default;
  SpectralDensity(std::vector<double> freq, std::vector<double> val, FreqUnit unit,
                  bool normalized = false);

  const std::vector<double>& freq() const { return freq_; }
  const std::vector<double>& val() const { return val_; }
  FreqUnit unit() const { return unit_; }
  bool normalized() const { return normalized_; }
  std::size_t size() const { return freq_.size(); }

  // Trapezoid mass over the grid.
  double mass() const;

 private:
  std::vector<double> freq_;
  std::vector<double> val_;
  FreqUnit unit_ = FreqUnit::rad_per_sample;
  bool normalized_ = false;
};

// Number of grid points shared by all spectral estimates in a run.
inline constexpr std::size_t kDefaultGridPoints = 513;

// n uniform points on (lo, hi]: lo + i*(hi-lo)/n for i = 1..n.
std::vector<double> uniform_grid(double lo_exclusive, double hi_inclusive, std::size_t n);

// Default estimation grids: (0, pi] for unit-rate series, (0, pi/dt] physical.
std::vector<double> default_lambda_grid(std::size_t n = kDefaultGridPoints);
std::vector<double> default_omega_grid(double dt, std::size_t n = kDefaultGridPoints);

// Rescales to unit trapezoid mass.  Throws DegenerateInput on zero mass.
SpectralDensity normalize(const SpectralDensity& s);

// Linear interpolation onto target_grid, which must lie inside the source
// grid's range (no extrapolation).  A normalized input is renormalized.
SpectralDensity regrid(const SpectralDensity& s, const std::vector<double>& target_grid);

// Converts a unit-rate density f(lambda) on (0, pi] to the one-sided physical
// density S(omega) = 2*dt*f(omega*dt) on (0, pi/dt], so that the trapezoid
// mass of S equals the full series variance.
SpectralDensity to_physical(const SpectralDensity& s, double dt);

}  // namespace tvclust
