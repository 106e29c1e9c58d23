#include "tvclust/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "tvclust/errors.hpp"

namespace tvclust {

namespace {

void require_common_grid(const SpectralDensity& f, const SpectralDensity& g,
                         const char* what) {
  if (f.size() != g.size()) {
    throw std::invalid_argument(std::string(what) + ": spectra live on different grids");
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = f.freq()[i], b = g.freq()[i];
    if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(b))) {
      throw std::invalid_argument(std::string(what) + ": spectra live on different grids");
    }
  }
}

void require_normalized(const SpectralDensity& s, const char* what) {
  if (!s.normalized()) {
    throw std::invalid_argument(std::string(what) + ": spectra must be normalized first");
  }
}

void require_same_length(const Periodogram& a, const Periodogram& b, const char* what) {
  if (a.length != b.length) {
    throw std::invalid_argument(std::string(what) +
                                ": periodograms come from different series lengths");
  }
}

double euclidean_over_n(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc) / static_cast<double>(a.size());
}

std::vector<double> log_of(std::vector<double> v) {
  v = floor_relative(std::move(v));
  for (double& x : v) x = std::log(x);
  return v;
}

}  // namespace

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::acf_uniform: return "ACFU";
    case Measure::acf_geometric: return "ACFG";
    case Measure::pgram: return "P";
    case Measure::pgram_norm: return "NP";
    case Measure::log_pgram: return "LP";
    case Measure::log_pgram_norm: return "LNP";
    case Measure::cepstral: return "CEP";
    case Measure::total_variation: return "TV";
    case Measure::l1_log: return "L1";
    case Measure::w_dls: return "WDLS";
    case Measure::isd: return "ISD";
  }
  return "?";
}

std::optional<Measure> measure_from_name(std::string_view name) {
  for (Measure m : all_measures()) {
    if (measure_name(m) == name) return m;
  }
  return std::nullopt;
}

const std::vector<Measure>& all_measures() {
  static const std::vector<Measure> all = {
      Measure::acf_uniform, Measure::acf_geometric, Measure::pgram,
      Measure::pgram_norm,  Measure::log_pgram,     Measure::log_pgram_norm,
      Measure::cepstral,    Measure::total_variation, Measure::l1_log,
      Measure::w_dls,       Measure::isd};
  return all;
}

double tv_distance(const SpectralDensity& f, const SpectralDensity& g) {
  require_common_grid(f, g, "tv_distance");
  require_normalized(f, "tv_distance");
  require_normalized(g, "tv_distance");
  std::vector<double> m(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) m[i] = std::min(f.val()[i], g.val()[i]);
  const double overlap = trapezoid(f.freq(), m);
  return std::clamp(1.0 - overlap, 0.0, 1.0);
}

double kl_divergence(const SpectralDensity& f, const SpectralDensity& g) {
  require_common_grid(f, g, "kl_divergence");
  require_normalized(f, "kl_divergence");
  require_normalized(g, "kl_divergence");
  std::vector<double> integrand(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double a = f.val()[i], b = g.val()[i];
    if (a <= 0.0) {
      integrand[i] = 0.0;  // 0 log 0 = 0
    } else if (b <= 0.0) {
      return std::numeric_limits<double>::infinity();
    } else {
      integrand[i] = a * std::log(a / b);
    }
  }
  return trapezoid(f.freq(), integrand);
}

double l1_log_distance(const SpectralDensity& f, const SpectralDensity& g) {
  require_common_grid(f, g, "l1_log_distance");
  require_normalized(f, "l1_log_distance");
  require_normalized(g, "l1_log_distance");
  const std::vector<double> la = log_of(f.val());
  const std::vector<double> lb = log_of(g.val());
  std::vector<double> integrand(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) integrand[i] = std::abs(la[i] - lb[i]);
  return 0.5 * trapezoid(f.freq(), integrand);
}

namespace {

double acf_weighted(const AcfEstimate& a, const AcfEstimate& b,
                    const std::function<double(std::size_t)>& weight) {
  if (a.rho.size() != b.rho.size()) {
    throw std::invalid_argument("acf_distance: lag counts differ");
  }
  double acc = 0.0;
  for (std::size_t i = 1; i < a.rho.size(); ++i) {
    const double d = a.rho[i] - b.rho[i];
    acc += weight(i) * d * d;
  }
  return std::sqrt(acc);
}

}  // namespace

double acf_distance_uniform(const AcfEstimate& a, const AcfEstimate& b) {
  return acf_weighted(a, b, [](std::size_t) { return 1.0; });
}

double acf_distance_geometric(const AcfEstimate& a, const AcfEstimate& b, double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument("acf_distance_geometric: p must be in (0, 1)");
  }
  return acf_weighted(a, b, [p](std::size_t i) {
    return p * std::pow(1.0 - p, static_cast<double>(i));
  });
}

double periodogram_distance(const Periodogram& a, const Periodogram& b, PgramVariant v) {
  require_same_length(a, b, "periodogram_distance");
  auto transform = [&](const Periodogram& pg) {
    std::vector<double> t = pg.val;
    switch (v) {
      case PgramVariant::plain:
        break;
      case PgramVariant::normalized:
        for (double& x : t) x /= pg.gamma0;
        break;
      case PgramVariant::log_plain:
        t = log_of(std::move(t));
        break;
      case PgramVariant::log_normalized: {
        t = log_of(std::move(t));
        const double lg = std::log(pg.gamma0);
        for (double& x : t) x -= lg;
        break;
      }
    }
    return t;
  };
  return euclidean_over_n(transform(a), transform(b));
}

double cepstral_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cepstral_distance: coefficient counts differ");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double w_divergence_term(double ratio, double alpha) {
  auto w = [alpha](double x) { return std::log(alpha * x + 1.0 - alpha) - alpha * std::log(x); };
  return w(ratio) + w(1.0 / ratio);
}

namespace {

std::vector<double> smoothed_positive(const Periodogram& pg, double bandwidth) {
  std::vector<double> sm = local_linear_smooth(pg.freq, pg.val, bandwidth);
  // Local-linear fits can dip below zero near sharp peaks; floor them so the
  // ratio inside the divergence stays positive.
  double vmax = 0.0;
  for (double v : sm) vmax = std::max(vmax, v);
  if (!(vmax > 0.0)) throw DegenerateInput("w_disparity: smoothed spectrum vanished");
  for (double& v : sm) v = std::max(v, 1e-12 * vmax);
  return sm;
}

}  // namespace

double w_disparity(const Periodogram& a, const Periodogram& b, double alpha,
                   double bandwidth) {
  require_same_length(a, b, "w_disparity");
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("w_disparity: alpha must be in (0, 1)");
  }
  const std::vector<double> fa = smoothed_positive(a, bandwidth);
  const std::vector<double> fb = smoothed_positive(b, bandwidth);
  std::vector<double> integrand(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i) {
    integrand[i] = w_divergence_term(fa[i] / fb[i], alpha);
  }
  // Integrand is even in lambda, so (1/4pi) over [-pi, pi] = (1/2pi) over [0, pi].
  return trapezoid(a.freq, integrand) / (2.0 * kPi);
}

double isd_distance(const Periodogram& a, const Periodogram& b, double bandwidth) {
  require_same_length(a, b, "isd_distance");
  const std::vector<double> ma = local_linear_smooth(a.freq, log_of(a.val), bandwidth);
  const std::vector<double> mb = local_linear_smooth(b.freq, log_of(b.val), bandwidth);
  std::vector<double> integrand(ma.size());
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const double d = ma[i] - mb[i];
    integrand[i] = d * d;
  }
  return trapezoid(a.freq, integrand);
}

DissimilarityMatrix::DissimilarityMatrix(std::vector<std::string> ids,
                                         std::vector<double> values, std::string measure)
    : ids_(std::move(ids)), d_(std::move(values)), measure_(std::move(measure)) {
  const std::size_t n = ids_.size();
  if (n < 2) throw std::invalid_argument("DissimilarityMatrix: need at least two items");
  if (d_.size() != n * n) throw std::invalid_argument("DissimilarityMatrix: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i * n + i] != 0.0) {
      throw std::invalid_argument("DissimilarityMatrix: nonzero diagonal");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d_[i * n + j];
      if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument("DissimilarityMatrix: entries must be finite nonnegative");
      }
      if (d_[j * n + i] != v) {
        throw std::invalid_argument("DissimilarityMatrix: matrix not symmetric");
      }
    }
  }
}

namespace {

// Everything build_matrix may need about one series, computed once.
struct ItemFeatures {
  AcfEstimate acf;
  Periodogram pg;
  std::vector<double> smooth_pg;      // WDLS
  std::vector<double> smooth_logpg;   // ISD
  SpectralDensity spec_norm;          // TV / L1
  std::vector<double> cep;            // CEP
};

bool needs_acf(Measure m) {
  return m == Measure::acf_uniform || m == Measure::acf_geometric;
}
bool needs_pgram(Measure m) {
  return m == Measure::pgram || m == Measure::pgram_norm || m == Measure::log_pgram ||
         m == Measure::log_pgram_norm || m == Measure::w_dls || m == Measure::isd;
}
bool needs_parzen(Measure m) {
  return m == Measure::total_variation || m == Measure::l1_log || m == Measure::cepstral;
}

double pair_distance(const ItemFeatures& a, const ItemFeatures& b, Measure m,
                     const MeasureConfig& cfg) {
  switch (m) {
    case Measure::acf_uniform: return acf_distance_uniform(a.acf, b.acf);
    case Measure::acf_geometric: return acf_distance_geometric(a.acf, b.acf, cfg.acf_geo_p);
    case Measure::pgram: return periodogram_distance(a.pg, b.pg, PgramVariant::plain);
    case Measure::pgram_norm: return periodogram_distance(a.pg, b.pg, PgramVariant::normalized);
    case Measure::log_pgram: return periodogram_distance(a.pg, b.pg, PgramVariant::log_plain);
    case Measure::log_pgram_norm:
      return periodogram_distance(a.pg, b.pg, PgramVariant::log_normalized);
    case Measure::cepstral: return cepstral_distance(a.cep, b.cep);
    case Measure::total_variation: return tv_distance(a.spec_norm, b.spec_norm);
    case Measure::l1_log: return l1_log_distance(a.spec_norm, b.spec_norm);
    case Measure::w_dls: {
      require_same_length(a.pg, b.pg, "w_disparity");
      std::vector<double> integrand(a.smooth_pg.size());
      for (std::size_t i = 0; i < integrand.size(); ++i) {
        integrand[i] = w_divergence_term(a.smooth_pg[i] / b.smooth_pg[i], cfg.w_alpha);
      }
      return trapezoid(a.pg.freq, integrand) / (2.0 * kPi);
    }
    case Measure::isd: {
      require_same_length(a.pg, b.pg, "isd_distance");
      std::vector<double> integrand(a.smooth_logpg.size());
      for (std::size_t i = 0; i < integrand.size(); ++i) {
        const double d = a.smooth_logpg[i] - b.smooth_logpg[i];
        integrand[i] = d * d;
      }
      return trapezoid(a.pg.freq, integrand);
    }
  }
  throw std::invalid_argument("build_matrix: unknown measure");
}

DissimilarityMatrix assemble(std::size_t n, const std::function<double(std::size_t, std::size_t)>& dist,
                             Measure m, const MeasureConfig& cfg) {
  std::vector<double> values(n * n, 0.0);
  struct Pair {
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  parallel_for(pairs.size(), [&](std::size_t idx) {
    const auto [i, j] = pairs[idx];
    try {
      const double v = dist(i, j);
      values[i * n + j] = v;
      values[j * n + i] = v;
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) {
        try {
          std::throw_with_nested(std::runtime_error(
              "build_matrix: pair (" + std::to_string(i) + ", " + std::to_string(j) + ")"));
        } catch (...) {
          error = std::current_exception();
        }
      }
    }
  });
  if (error) std::rethrow_exception(error);
  if (cfg.on_pair) {
    for (const Pair& p : pairs) cfg.on_pair(p.i, p.j);
  }
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  return DissimilarityMatrix(std::move(ids), std::move(values), measure_name(m));
}

}  // namespace

DissimilarityMatrix build_matrix(const std::vector<TimeSeries>& items, Measure measure,
                                 const MeasureConfig& cfg) {
  const std::size_t n = items.size();
  if (n < 2) throw std::invalid_argument("build_matrix: need at least two items");

  std::vector<ItemFeatures> feats(n);
  std::exception_ptr error;
  std::mutex error_mutex;
  parallel_for(n, [&](std::size_t i) {
    try {
      ItemFeatures& f = feats[i];
      if (needs_acf(measure)) f.acf = acf(items[i], cfg.acf_max_lag);
      if (needs_pgram(measure)) {
        f.pg = periodogram(items[i]);
        if (measure == Measure::w_dls) {
          f.smooth_pg = local_linear_smooth(f.pg.freq, f.pg.val, cfg.smooth_bandwidth);
          double vmax = 0.0;
          for (double v : f.smooth_pg) vmax = std::max(vmax, v);
          if (!(vmax > 0.0)) throw DegenerateInput("w_disparity: smoothed spectrum vanished");
          for (double& v : f.smooth_pg) v = std::max(v, 1e-12 * vmax);
        }
        if (measure == Measure::isd) {
          f.smooth_logpg =
              local_linear_smooth(f.pg.freq, log_of(f.pg.val), cfg.smooth_bandwidth);
        }
      }
      if (needs_parzen(measure)) {
        const SpectralDensity spec =
            parzen_spectrum(items[i], cfg.parzen_bandwidth, cfg.grid_points);
        if (measure == Measure::cepstral) {
          f.cep = cepstral_coeffs(spec, cfg.cep_p);
        } else {
          f.spec_norm = normalize(spec);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) {
        try {
          std::throw_with_nested(
              std::runtime_error("build_matrix: item " + std::to_string(i)));
        } catch (...) {
          error = std::current_exception();
        }
      }
    }
  });
  if (error) std::rethrow_exception(error);

  return assemble(
      n, [&](std::size_t i, std::size_t j) { return pair_distance(feats[i], feats[j], measure, cfg); },
      measure, cfg);
}

DissimilarityMatrix build_matrix(const std::vector<SpectralDensity>& items, Measure measure,
                                 const MeasureConfig& cfg) {
  const std::size_t n = items.size();
  if (n < 2) throw std::invalid_argument("build_matrix: need at least two items");
  if (measure != Measure::total_variation && measure != Measure::l1_log &&
      measure != Measure::cepstral) {
    throw std::invalid_argument(
        "build_matrix: only spectral measures (TV, L1, CEP) accept densities");
  }

  std::vector<SpectralDensity> normed(n);
  std::vector<std::vector<double>> ceps(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (measure == Measure::cepstral) {
      ceps[i] = cepstral_coeffs(items[i], cfg.cep_p);
    } else {
      normed[i] = items[i].normalized() ? items[i] : normalize(items[i]);
    }
  }
  return assemble(
      n,
      [&](std::size_t i, std::size_t j) {
        switch (measure) {
          case Measure::total_variation: return tv_distance(normed[i], normed[j]);
          case Measure::l1_log: return l1_log_distance(normed[i], normed[j]);
          default: return cepstral_distance(ceps[i], ceps[j]);
        }
      },
      measure, cfg);
}

}  // namespace tvclust
