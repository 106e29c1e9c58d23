#include "tvclust/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "tvclust/errors.hpp"
#include "tvclust/fft.hpp"
#include "tvclust/rng.hpp"
#include "tvclust/util.hpp"
#include "tvclust/wave_spectra.hpp"

namespace tvclust {

namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

TimeSeries simulate_from_spectrum(const SpectralDensity& spec, double dt, std::size_t length,
                                  std::uint64_t seed) {
  if (!(dt > 0.0)) throw std::invalid_argument("simulate_from_spectrum: dt must be positive");
  if (length < 2) throw std::invalid_argument("simulate_from_spectrum: length must be >= 2");
  if (spec.unit() != FreqUnit::rad_per_sec) {
    throw std::invalid_argument("simulate_from_spectrum: spectrum must be in rad/s");
  }
  const double nyquist = kPi / dt;
  if (spec.freq().back() < 0.99 * nyquist) {
    throw std::invalid_argument("simulate_from_spectrum: spectrum grid stops short of Nyquist");
  }

  const std::size_t n = std::max<std::size_t>(next_pow2(length), 64);
  const std::size_t half = n / 2;
  const double d_omega = 2.0 * kPi / (static_cast<double>(n) * dt);

  Rng rng(seed);
  std::vector<std::complex<double>> coef(n, 0.0);
  // Independent complex Gaussian coefficient per positive-frequency bin.  The
  // conjugate pair (k, n-k) contributes 4*Var(re_k)/n^2 to the sample variance,
  // so Var(re_k) = Var(im_k) = (n/2)^2 * S(omega_k) * d_omega makes the series
  // variance sum_k S(omega_k) * d_omega, the one-sided spectral mass.
  for (std::size_t k = 1; k < half; ++k) {
    const double omega = d_omega * static_cast<double>(k);
    const double s = interp_linear(spec.freq(), spec.val(), omega);
    if (s <= 0.0) {
      rng.normal();
      rng.normal();
      continue;
    }
    const double sd = 0.5 * static_cast<double>(n) * std::sqrt(s * d_omega);
    const double re = sd * rng.normal();
    const double im = sd * rng.normal();
    coef[k] = {re, im};
    coef[n - k] = {re, -im};
  }
  {
    const double omega = d_omega * static_cast<double>(half);
    const double s = interp_linear(spec.freq(), spec.val(), omega);
    coef[half] = static_cast<double>(n) * std::sqrt(std::max(s, 0.0) * d_omega) * rng.normal();
  }

  detail::dft(coef, +1);
  std::vector<double> x(length);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t t = 0; t < length; ++t) x[t] = coef[t].real() * inv_n;
  return TimeSeries(std::move(x), dt);
}

SpectralDensity PhaseSpec::spectrum(double dt, std::size_t grid_points) const {
  switch (family) {
    case Family::jonswap:
      return jonswap_spectrum(JonswapParams{hs, tp, 9.81}, default_omega_grid(dt, grid_points));
    case Family::torsethaugen:
      return torsethaugen_spectrum(TorsethaugenParams{hs, tp, 9.81},
                                   default_omega_grid(dt, grid_points));
    case Family::arma:
      return to_physical(arma_spectrum(arma, default_lambda_grid(grid_points)), dt);
  }
  throw std::invalid_argument("PhaseSpec: unknown family");
}

namespace {

std::size_t whole_windows(double duration_s, double window_len_s, const char* what) {
  const double ratio = duration_s / window_len_s;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-6 * std::max(1.0, ratio)) {
    throw std::invalid_argument(std::string("simulate_transition_record: ") + what +
                                " duration must be a whole number of windows");
  }
  return static_cast<std::size_t>(rounded);
}

// Convex mixture of normalized spectra, rescaled to the interpolated variance.
SpectralDensity mix_spectra(const SpectralDensity& a, const SpectralDensity& b, double alpha) {
  const double mass_a = a.mass();
  const double mass_b = b.mass();
  const double target = (1.0 - alpha) * mass_a + alpha * mass_b;
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    v[i] = target * ((1.0 - alpha) * a.val()[i] / mass_a + alpha * b.val()[i] / mass_b);
  }
  return SpectralDensity(a.freq(), std::move(v), a.unit(), false);
}

}  // namespace

LabeledRecord simulate_transition_record(const TransitionScenario& scenario,
                                         std::uint64_t seed) {
  if (scenario.phases.empty()) {
    throw std::invalid_argument("simulate_transition_record: need at least one phase");
  }
  if (scenario.transition_s.size() + 1 != scenario.phases.size()) {
    throw std::invalid_argument(
        "simulate_transition_record: need exactly one transition per adjacent phase pair");
  }
  if (!(scenario.dt > 0.0) || !(scenario.window_len_s > 0.0)) {
    throw std::invalid_argument("simulate_transition_record: dt and window length must be positive");
  }
  const double spw_exact = scenario.window_len_s / scenario.dt;
  const std::size_t spw = static_cast<std::size_t>(std::round(spw_exact));
  if (spw < 4 || std::abs(spw_exact - static_cast<double>(spw)) > 1e-6 * spw_exact) {
    throw std::invalid_argument(
        "simulate_transition_record: window length must be a whole number of samples");
  }

  std::vector<SpectralDensity> phase_spectra;
  phase_spectra.reserve(scenario.phases.size());
  for (const PhaseSpec& ph : scenario.phases) {
    phase_spectra.push_back(ph.spectrum(scenario.dt));
  }

  // Per-window spectra and ground-truth labels, phases and transitions
  // interleaved: phase i -> segment 2i, transition i -> segment 2i+1.
  std::vector<SpectralDensity> window_spectra;
  std::vector<int> labels;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < scenario.phases.size(); ++i) {
    names.push_back("phase-" + std::to_string(i));
    const std::size_t w = whole_windows(scenario.phases[i].duration_s, scenario.window_len_s,
                                        "phase");
    for (std::size_t j = 0; j < w; ++j) {
      window_spectra.push_back(phase_spectra[i]);
      labels.push_back(static_cast<int>(2 * i));
    }
    if (i + 1 < scenario.phases.size()) {
      names.push_back("transition-" + std::to_string(i));
      const std::size_t wt = whole_windows(scenario.transition_s[i], scenario.window_len_s,
                                           "transition");
      for (std::size_t j = 0; j < wt; ++j) {
        const double alpha =
            static_cast<double>(j + 1) / static_cast<double>(wt + 1);
        window_spectra.push_back(mix_spectra(phase_spectra[i], phase_spectra[i + 1], alpha));
        labels.push_back(static_cast<int>(2 * i + 1));
      }
    }
  }

  std::vector<double> x;
  x.reserve(window_spectra.size() * spw);
  for (std::size_t w = 0; w < window_spectra.size(); ++w) {
    const TimeSeries win =
        simulate_from_spectrum(window_spectra[w], scenario.dt, spw, derive_seed(seed, w));
    x.insert(x.end(), win.x().begin(), win.x().end());
  }

  LabeledRecord out;
  out.series = TimeSeries(std::move(x), scenario.dt);
  out.samples_per_window = spw;
  out.window_labels = std::move(labels);
  out.label_names = std::move(names);
  return out;
}

TransitionScenario three_state_scenario() {
  TransitionScenario sc;
  sc.dt = 1.0 / 1.28;
  sc.window_len_s = 1800.0;
  PhaseSpec a;
  a.family = PhaseSpec::Family::jonswap;
  a.hs = 1.0;
  a.tp = 3.6;
  a.duration_s = 4.0 * 3600.0;
  PhaseSpec b = a;
  b.tp = 4.2;
  PhaseSpec c;
  c.family = PhaseSpec::Family::torsethaugen;
  c.hs = 1.0;
  c.tp = 5.0;
  c.duration_s = 4.0 * 3600.0;
  sc.phases = {a, b, c};
  sc.transition_s = {3.0 * 3600.0, 3.0 * 3600.0};
  return sc;
}

}  // namespace tvclust
