#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tvclust/arma.hpp"
#include "tvclust/spectrum.hpp"
#include "tvclust/time_series.hpp"

namespace tvclust {

// Draws a stationary Gaussian series with one-sided target spectrum `spec`
// (rad/s): independent complex Gaussian Fourier coefficients per frequency
// bin with variance proportional to S(omega_k)*delta_omega, then an inverse
// FFT.  The spectrum grid must reach at least 99% of the Nyquist rate pi/dt;
// S is linearly interpolated on the synthesis bins (zero outside the grid).
// Deterministic in `seed`; O(T log T).
TimeSeries simulate_from_spectrum(const SpectralDensity& spec, double dt,
                                  std::size_t length, std::uint64_t seed);

// One stationary sea state (or unit-rate ARMA regime) inside a scenario.
struct PhaseSpec {
  enum class Family { jonswap, torsethaugen, arma };
  Family family = Family::jonswap;
  double hs = 1.0;           // wave families only
  double tp = 1.0;           // wave families only
  ArimaModel arma;           // family == arma only (d must be 0)
  double duration_s = 0.0;

  // The phase's spectral density on the shared physical grid for rate dt.
  SpectralDensity spectrum(double dt, std::size_t grid_points = kDefaultGridPoints) const;
};

// A piecewise-stationary record: stationary phases joined by transition
// periods.  Durations must be whole multiples of window_len_s.
struct TransitionScenario {
  std::vector<PhaseSpec> phases;      // size >= 1
  std::vector<double> transition_s;   // size == phases.size() - 1
  double dt = 1.0 / 1.28;
  double window_len_s = 1800.0;
};

// Simulated scenario record with per-window ground truth.  Window w of a
// transition carrying W windows is drawn from the convex spectral mixture
// (1 - a) S_prev + a S_next with a = w / (W + 1), where both spectra are
// normalized and the mixture is rescaled to the interpolated variance.
// Windows are drawn independently with seeds derived per window index.
struct LabeledRecord {
  TimeSeries series;
  std::size_t samples_per_window = 0;
  std::vector<int> window_labels;        // ground truth, 0-based segment index
  std::vector<std::string> label_names;  // "phase-0", "transition-0", "phase-1", ...
};

LabeledRecord simulate_transition_record(const TransitionScenario& scenario,
                                         std::uint64_t seed);

// The canonical three-sea-state demo: two unimodal wind-sea states and one
// double-peaked state (hs = 1 m; tp = 3.6 s, 4.2 s, 5.0 s), 4 h each, joined
// by 3 h transitions; 30-minute windows at dt = 1/1.28 s (36 windows total).
TransitionScenario three_state_scenario();

}  // namespace tvclust
