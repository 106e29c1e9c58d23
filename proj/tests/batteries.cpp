#include "batteries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "tvclust/arma.hpp"
#include "tvclust/cluster.hpp"
#include "tvclust/distance.hpp"
#include "tvclust/rng.hpp"
#include "tvclust/util.hpp"

namespace tvclust::testing {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

// Random normalized density on a shared 129-point grid.
SpectralDensity random_density(Rng& rng, bool with_zeros = false) {
  static const std::vector<double> grid = uniform_grid(0.0, kPi, 129);
  std::vector<double> val(grid.size());
  for (double& v : val) v = 0.02 + std::abs(rng.normal());
  if (with_zeros) {
    // Zero out a contiguous third of the support.
    const std::size_t start = static_cast<std::size_t>(rng.uniform() * 80.0);
    for (std::size_t i = start; i < start + 43 && i < val.size(); ++i) val[i] = 0.0;
  }
  return normalize(SpectralDensity(grid, val, FreqUnit::rad_per_sample));
}

}  // namespace

SpectralDensity step_density(const std::vector<double>& edges,
                             const std::vector<double>& masses) {
  constexpr double kRamp = 1e-9;
  std::vector<double> freq, val;
  for (std::size_t b = 0; b < masses.size(); ++b) {
    const double width = edges[b + 1] - edges[b];
    const double height = masses[b] / width;
    freq.push_back(edges[b] + kRamp);
    val.push_back(height);
    freq.push_back(edges[b + 1]);
    val.push_back(height);
  }
  return normalize(SpectralDensity(freq, val, FreqUnit::rad_per_sample));
}

BatteryResult tv_metric_battery(std::size_t triples, std::uint64_t seed) {
  Rng rng(seed);
  double worst_triangle = 0.0, worst_symmetry = 0.0;
  for (std::size_t t = 0; t < triples; ++t) {
    const SpectralDensity f = random_density(rng), g = random_density(rng),
                          h = random_density(rng);
    const double fg = tv_distance(f, g), gf = tv_distance(g, f);
    const double gh = tv_distance(g, h), fh = tv_distance(f, h);
    worst_symmetry = std::max(worst_symmetry, std::abs(fg - gf));
    worst_triangle = std::max(worst_triangle, fh - (fg + gh));
    if (!(tv_distance(f, f) <= 1e-12)) {
      return {false, "tv(f,f) not ~0"};
    }
    for (const double d : {fg, gh, fh}) {
      if (!(d >= 0.0 && d <= 1.0)) return {false, "tv outside [0,1]: " + fmt("%.17g", d)};
    }
  }
  const bool ok = worst_symmetry <= 1e-15 && worst_triangle <= 1e-12;
  return {ok, std::to_string(triples) + " triples; max symmetry gap " +
                  fmt("%.2e", worst_symmetry) + ", max triangle excess " +
                  fmt("%.2e", worst_triangle)};
}

BatteryResult pinsker_battery(std::size_t pairs, std::uint64_t seed) {
  Rng rng(seed);
  double worst = -1.0;
  std::size_t infinite = 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    const bool zeros = t % 20 == 19;  // exercise the +infinity branch too
    const SpectralDensity f = random_density(rng);
    const SpectralDensity g = random_density(rng, zeros);
    const double tv = tv_distance(f, g);
    const double kl = kl_divergence(f, g);
    if (std::isinf(kl)) {
      ++infinite;
      continue;
    }
    const double excess = 0.5 * tv * tv - kl;
    worst = std::max(worst, excess);
    if (excess > 1e-9) {
      return {false, "violated: 0.5*tv^2 - KL = " + fmt("%.3e", excess)};
    }
  }
  // Disjoint supports must yield an infinite divergence.
  const SpectralDensity a = step_density({0, 1, 2, 3}, {1, 0, 0});
  const SpectralDensity b = step_density({0, 1, 2, 3}, {0, 0, 1});
  if (!std::isinf(kl_divergence(a, b))) return {false, "disjoint supports gave finite KL"};
  return {true, std::to_string(pairs) + " pairs (" + std::to_string(infinite) +
                    " infinite); max 0.5*tv^2 - KL = " + fmt("%.2e", worst)};
}

BatteryResult tv_sup_equivalence_battery(std::size_t densities, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> edges(9);
  for (int i = 0; i <= 8; ++i) edges[i] = static_cast<double>(i);
  double worst = 0.0;
  for (std::size_t t = 0; t < densities; ++t) {
    std::vector<double> p(8), q(8);
    for (double& v : p) v = 0.05 + rng.uniform();
    for (double& v : q) v = 0.05 + rng.uniform();
    if (t == 0) {  // disjoint-support corner: distance must reach 1
      p = {1, 1, 1, 1, 0, 0, 0, 0};
      q = {0, 0, 0, 0, 1, 1, 1, 1};
    }
    const double ps = std::accumulate(p.begin(), p.end(), 0.0);
    const double qs = std::accumulate(q.begin(), q.end(), 0.0);
    for (double& v : p) v /= ps;
    for (double& v : q) v /= qs;

    // Exhaustive maximum of |P(A) - Q(A)| over all unions of bins.
    double sup = 0.0;
    for (unsigned mask = 0; mask < 256; ++mask) {
      double diff = 0.0;
      for (int b = 0; b < 8; ++b) {
        if (mask & (1u << b)) diff += p[b] - q[b];
      }
      sup = std::max(sup, std::abs(diff));
    }
    double half_l1 = 0.0;
    for (int b = 0; b < 8; ++b) half_l1 += 0.5 * std::abs(p[b] - q[b]);

    const double tv = tv_distance(step_density(edges, p), step_density(edges, q));
    worst = std::max({worst, std::abs(tv - sup), std::abs(sup - half_l1)});
    if (std::abs(tv - sup) > 1e-6 || std::abs(sup - half_l1) > 1e-12) {
      return {false, "sup-form mismatch: tv " + fmt("%.9f", tv) + " vs sup " +
                         fmt("%.9f", sup)};
    }
  }
  return {true, std::to_string(densities) + " densities x 256 subsets; max gap " +
                    fmt("%.2e", worst)};
}

namespace {

// Naive agglomeration recomputing the linkage from the original matrix at
// every step; same id scheme and tie-break as the production code.
struct NaiveCluster {
  std::size_t id;
  std::vector<std::size_t> items;
};

double naive_linkage(const DissimilarityMatrix& d, const NaiveCluster& x,
                     const NaiveCluster& y, Linkage linkage) {
  double acc = linkage == Linkage::complete ? 0.0 : 0.0;
  std::size_t count = 0;
  for (const std::size_t a : x.items) {
    for (const std::size_t b : y.items) {
      const double v = d.at(a, b);
      if (linkage == Linkage::complete) {
        acc = std::max(acc, v);
      } else {
        acc += v;
      }
      ++count;
    }
  }
  return linkage == Linkage::complete ? acc : acc / static_cast<double>(count);
}

std::vector<std::vector<int>> naive_cut_all(const DissimilarityMatrix& d, Linkage linkage,
                                            std::vector<double>* heights) {
  const std::size_t n = d.n();
  std::vector<NaiveCluster> active;
  for (std::size_t i = 0; i < n; ++i) active.push_back({i, {i}});

  // Record the partition before each merge (k = n down to 1).
  std::vector<std::vector<int>> by_k(n + 1);
  auto snapshot = [&](int k) {
    std::vector<int> label(n, -1);
    // Canonical labels by lowest contained item index.
    std::vector<const NaiveCluster*> order(active.size());
    for (std::size_t c = 0; c < active.size(); ++c) order[c] = &active[c];
    std::sort(order.begin(), order.end(), [](const NaiveCluster* a, const NaiveCluster* b) {
      return *std::min_element(a->items.begin(), a->items.end()) <
             *std::min_element(b->items.begin(), b->items.end());
    });
    for (std::size_t c = 0; c < order.size(); ++c) {
      for (const std::size_t item : order[c]->items) label[item] = static_cast<int>(c);
    }
    by_k[static_cast<std::size_t>(k)] = label;
  };

  std::size_t next_id = n;
  snapshot(static_cast<int>(n));
  while (active.size() > 1) {
    std::size_t bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const double v = naive_linkage(d, active[i], active[j], linkage);
        const std::size_t a = std::min(active[i].id, active[j].id);
        const std::size_t b = std::max(active[i].id, active[j].id);
        const std::size_t ca = std::min(active[bi].id, active[bj].id);
        const std::size_t cb = std::max(active[bi].id, active[bj].id);
        if (v < best || (v == best && (a < ca || (a == ca && b < cb)))) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (heights) heights->push_back(best);
    NaiveCluster merged;
    merged.id = next_id++;
    merged.items = active[bi].items;
    merged.items.insert(merged.items.end(), active[bj].items.begin(), active[bj].items.end());
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bi));
    active.push_back(std::move(merged));
    snapshot(static_cast<int>(active.size()));
  }
  return by_k;
}

}  // namespace

BatteryResult cluster_oracle_battery(std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  double worst_height = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 5.9999);
    std::vector<double> cells(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = 0.01 + rng.uniform();
        cells[i * n + j] = cells[j * n + i] = v;
      }
    }
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
    const DissimilarityMatrix d(ids, cells, "test");

    for (const Linkage linkage : {Linkage::complete, Linkage::average}) {
      std::vector<double> oracle_heights;
      const std::vector<std::vector<int>> oracle = naive_cut_all(d, linkage, &oracle_heights);
      const Dendrogram dend = agglomerate(d, linkage);
      for (std::size_t s = 0; s < dend.merges.size(); ++s) {
        worst_height =
            std::max(worst_height, std::abs(dend.merges[s].height - oracle_heights[s]));
        if (std::abs(dend.merges[s].height - oracle_heights[s]) > 1e-9) {
          return {false, "merge height mismatch at trial " + std::to_string(t)};
        }
      }
      for (int k = 1; k <= static_cast<int>(n); ++k) {
        const Partition p = cut(dend, k);
        if (p.label != oracle[static_cast<std::size_t>(k)]) {
          return {false, "partition mismatch at trial " + std::to_string(t) + ", n=" +
                             std::to_string(n) + ", k=" + std::to_string(k)};
        }
      }
    }
  }
  return {true, std::to_string(trials) +
                    " random matrices, both linkages, every k; max height gap " +
                    fmt("%.2e", worst_height)};
}

BatteryResult sim_index_battery() {
  auto part = [](std::vector<int> l) {
    Partition p;
    p.k = *std::max_element(l.begin(), l.end()) + 1;
    p.label = std::move(l);
    return p;
  };
  // Perfect agreement.
  const Partition truth = part({0, 0, 1, 1});
  if (sim_index(truth, truth) != 1.0) return {false, "identity != 1"};
  // {1},{2,3,4} against {1,2},{3,4}: (2/3 + 4/5)/2 = 11/15.
  const double v = sim_index(part({0, 1, 1, 1}), truth);
  if (std::abs(v - 11.0 / 15.0) > 1e-12) {
    return {false, "hand case: got " + fmt("%.12f", v) + ", want 11/15"};
  }
  // One big cluster against g equal groups of size s: 2/(g+1).
  for (int g = 2; g <= 5; ++g) {
    std::vector<int> t, f;
    for (int i = 0; i < g; ++i) {
      for (int s = 0; s < 3; ++s) {
        t.push_back(i);
        f.push_back(0);
      }
    }
    const double got = sim_index(part(std::move(f)), part(std::move(t)));
    if (std::abs(got - 2.0 / (g + 1)) > 1e-12) {
      return {false, "one-cluster closed form failed at g=" + std::to_string(g)};
    }
  }
  return {true, "identity, 11/15 hand case, 2/(g+1) closed form for g=2..5"};
}

BatteryResult validity_index_battery() {
  // Four points on a line at {0, 1, 10, 11} with absolute-difference costs.
  const std::vector<double> pos = {0, 1, 10, 11};
  std::vector<double> cells(16, 0.0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) cells[i * 4 + j] = std::abs(pos[i] - pos[j]);
  }
  const DissimilarityMatrix line({"0", "1", "10", "11"}, cells, "test");
  Partition two;
  two.label = {0, 0, 1, 1};
  two.k = 2;

  // Average inter = (10+11+9+10)/4 = 10, both diameters 1.
  const double dunn = dunn_index(two, line);
  if (std::abs(dunn - 10.0) > 1e-12) return {false, "line Dunn: got " + fmt("%.12f", dunn)};

  const std::vector<double> s = silhouette(two, line);
  if (std::abs(s[0] - (10.5 - 1.0) / 10.5) > 1e-12) {
    return {false, "line silhouette s(0): got " + fmt("%.12f", s[0])};
  }
  for (const double si : s) {
    if (!(si > 0.85)) return {false, "line silhouette below 0.85"};
  }

  // Direct formula case a=1, b=3 -> 2/3, and the equidistant zero.
  std::vector<double> cells2 = {0, 1, 3, 3, 1, 0, 3, 3, 3, 3, 0, 1, 3, 3, 1, 0};
  const DissimilarityMatrix m2({"a", "b", "c", "d"}, cells2, "test");
  const std::vector<double> s2 = silhouette(two, m2);
  if (std::abs(s2[0] - 2.0 / 3.0) > 1e-12) return {false, "a=1,b=3 silhouette != 2/3"};
  std::vector<double> cells3 = cells2;
  cells3[1] = cells3[4] = 2.0;   // d(0,1) = 2 so a(0) = 2
  cells3[2] = cells3[8] = 2.0;   // d(0,2) = d(0,3) = 2 so b(0) = 2
  cells3[3] = cells3[12] = 2.0;
  const DissimilarityMatrix m3({"a", "b", "c", "d"}, cells3, "test");
  if (silhouette(two, m3)[0] != 0.0) return {false, "equidistant silhouette != 0"};

  // Two singletons: all diameters zero -> +infinity.
  std::vector<double> cells4 = {0, 5, 5, 0};
  Partition singletons;
  singletons.label = {0, 1};
  singletons.k = 2;
  if (!std::isinf(dunn_index(singletons, DissimilarityMatrix({"x", "y"}, cells4, "test")))) {
    return {false, "two singletons did not give +infinity"};
  }

  // Separated blocks score a higher Dunn than an interleaved labeling.
  Partition interleaved;
  interleaved.label = {0, 1, 0, 1};
  interleaved.k = 2;
  if (!(dunn_index(two, line) > dunn_index(interleaved, line))) {
    return {false, "separated labeling did not beat interleaved"};
  }
  return {true, "line Dunn=10, s(0)=9.5/10.5, 2/3 case, equidistant 0, singleton +inf"};
}

BatteryResult scale_invariance_battery() {
  const ArimaModel mx({0.6}, {}), my({0.3}, {0.4});
  const TimeSeries x = simulate_arima(mx, 400, 11);
  const TimeSeries y = simulate_arima(my, 400, 12);

  const std::vector<double> scales = {3.7, 1.0 / 64.0};
  const std::vector<Measure> invariant = {Measure::total_variation, Measure::l1_log,
                                          Measure::pgram_norm,      Measure::log_pgram_norm,
                                          Measure::acf_uniform,     Measure::acf_geometric};
  const std::vector<Measure> variant = {Measure::pgram, Measure::log_pgram};

  auto pair_distance = [&](Measure m, const TimeSeries& b) {
    return build_matrix(std::vector<TimeSeries>{x, b}, m).at(0, 1);
  };

  double worst = 0.0;
  for (const double c : scales) {
    std::vector<double> scaled = y.x();
    for (double& v : scaled) v *= c;
    const TimeSeries cy(scaled, y.dt());
    for (const Measure m : invariant) {
      const double d0 = pair_distance(m, y), d1 = pair_distance(m, cy);
      const double gap = std::abs(d0 - d1) / std::max(1.0, std::abs(d0));
      worst = std::max(worst, gap);
      if (gap > 1e-9) {
        return {false, measure_name(m) + " moved by " + fmt("%.3e", gap) +
                           " under scaling"};
      }
    }
    for (const Measure m : variant) {
      const double d0 = pair_distance(m, y), d1 = pair_distance(m, cy);
      if (std::abs(d0 - d1) <= 1e-6 * std::max(1.0, std::abs(d0))) {
        return {false, measure_name(m) + " failed to move under scaling"};
      }
    }
  }
  return {true, "tv/l1/np/lnp/acfu/acfg invariant (max gap " + fmt("%.2e", worst) +
                    "); p/lp scale-dependent as required"};
}

}  // namespace tvclust::testing
