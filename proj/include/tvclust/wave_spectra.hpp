#pragma once

#include <vector>

#include "tvclust/spectrum.hpp"

namespace tvclust {

// JONSWAP sea-surface elevation spectrum.  hs is the significant wave height
// (m), tp the peak period (s).  The peak angular frequency convention here is
// omega_p = pi / tp (some texts use 2*pi/tp; this library consistently uses
// the former, and records spectra in rad/s so consumers need no convention).
struct JonswapParams {
  double hs = 1.0;
  double tp = 1.0;
  double g = 9.81;

  // Fitted peak-enhancement factor; depends on tp/sqrt(hs) only.
  double peak_enhancement() const;

  // True when 3.6*sqrt(hs) <= tp <= 5*sqrt(hs), the band where the fitted
  // peak-enhancement expression is considered trustworthy.
  bool in_validity_band() const;
};

// Evaluates on omega_grid (rad/s, strictly increasing, > 0) and rescales so
// the trapezoid mass on that grid equals (hs/4)^2, i.e. 4*sqrt(integral) == hs.
SpectralDensity jonswap_spectrum(const JonswapParams& p,
                                 const std::vector<double>& omega_grid);

// Double-peak (swell + wind sea) spectrum in the style of the Torsethaugen
// family, built as the sum of two JONSWAP-shaped components:
//
//   T_f = 6.6 * hs^(1/3) separates wind-dominated (tp <= T_f) from
//   swell-dominated (tp > T_f) seas.
//
//   wind-dominated:  eps = (T_f - tp) / (T_f - 2*sqrt(hs))
//                    r   = 0.7 + 0.3 * exp(-(eps/0.5)^2)      (primary share)
//                    primary  (wind):  H = r*hs,            T = tp
//                    secondary(swell): H = hs*sqrt(1-r^2),  T = T_f + 2
//
//   swell-dominated: eps = (tp - T_f) / (25 - T_f)
//                    r   = 0.6 + 0.4 * exp(-(eps/0.3)^2)
//                    primary  (swell): H = r*hs,            T = tp
//                    secondary(wind):  H = hs*sqrt(1-r^2),  T = 6.6*H^(1/3)
//
// The primary peak gets enhancement gamma = max(1, 35*((2pi/g)*H/T^2)^(6/7)),
// the secondary gamma = 1.  Each component is rescaled to variance (H/4)^2,
// so the total mass is exactly (hs/4)^2 on the output grid.
struct TorsethaugenParams {
  double hs = 1.0;
  double tp = 1.0;
  double g = 9.81;
};

SpectralDensity torsethaugen_spectrum(const TorsethaugenParams& p,
                                      const std::vector<double>& omega_grid);

}  // namespace tvclust
