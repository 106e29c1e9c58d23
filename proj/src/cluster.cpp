#include "tvclust/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tvclust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_partition(const Partition& p, std::size_t n) {
  if (p.label.size() != n) {
    throw std::invalid_argument("partition size does not match matrix");
  }
  std::vector<bool> seen(static_cast<std::size_t>(p.k), false);
  for (int l : p.label) {
    if (l < 0 || l >= p.k) throw std::invalid_argument("partition label out of range");
    seen[static_cast<std::size_t>(l)] = true;
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("partition has an empty cluster");
  }
}

// Canonical relabeling: cluster of the lowest item index becomes 0, etc.
Partition canonicalize(const std::vector<int>& raw, int k) {
  Partition out;
  out.k = k;
  out.label.assign(raw.size(), -1);
  std::vector<int> remap(static_cast<std::size_t>(*std::max_element(raw.begin(), raw.end())) + 1,
                         -1);
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int& slot = remap[static_cast<std::size_t>(raw[i])];
    if (slot < 0) slot = next++;
    out.label[i] = slot;
  }
  if (next != k) throw std::logic_error("canonicalize: wrong cluster count");
  return out;
}

}  // namespace

Dendrogram agglomerate(const DissimilarityMatrix& d, Linkage linkage) {
  const std::size_t n = d.n();
  Dendrogram out;
  out.n_leaves = n;
  out.merges.reserve(n - 1);

  // Active clusters: id, size, and a working row of pairwise linkages.
  std::vector<std::size_t> id(n);
  std::vector<double> size(n, 1.0);
  std::vector<bool> alive(n, true);
  std::iota(id.begin(), id.end(), 0);
  std::vector<double> w(d.values());  // n x n working matrix, indexed by slot

  double last_height = -kInf;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    // Find the closest active pair; ties break on the smallest (id_a, id_b).
    std::size_t bi = 0, bj = 0;
    double best = kInf;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        const double v = w[i * n + j];
        const std::size_t a = std::min(id[i], id[j]);
        const std::size_t b = std::max(id[i], id[j]);
        const std::size_t ba = found ? std::min(id[bi], id[bj]) : 0;
        const std::size_t bb = found ? std::max(id[bi], id[bj]) : 0;
        if (!found || v < best ||
            (v == best && (a < ba || (a == ba && b < bb)))) {
          best = v;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }

    // Complete and average linkage are monotone; a decreasing height would
    // mean the update rule is broken, not the data.
    if (best < last_height - 1e-9 * std::max(1.0, std::abs(last_height))) {
      throw std::logic_error("agglomerate: non-monotone merge heights");
    }
    last_height = std::max(last_height, best);

    out.merges.push_back({std::min(id[bi], id[bj]), std::max(id[bi], id[bj]), best});

    // Lance-Williams update into slot bi; slot bj dies.
    for (std::size_t t = 0; t < n; ++t) {
      if (!alive[t] || t == bi || t == bj) continue;
      const double dat = w[bi * n + t];
      const double dbt = w[bj * n + t];
      double v = 0.0;
      switch (linkage) {
        case Linkage::complete:
          v = std::max(dat, dbt);
          break;
        case Linkage::average:
          v = (size[bi] * dat + size[bj] * dbt) / (size[bi] + size[bj]);
          break;
      }
      w[bi * n + t] = v;
      w[t * n + bi] = v;
    }
    size[bi] += size[bj];
    alive[bj] = false;
    id[bi] = n + step;
  }
  return out;
}

Partition cut(const Dendrogram& dend, int k) {
  const std::size_t n = dend.n_leaves;
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("cut: k must be in [1, n]");
  }
  // Undo the k-1 highest merges = replay the first n-k (heights non-decreasing).
  std::vector<std::size_t> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  const std::size_t keep = n - static_cast<std::size_t>(k);
  for (std::size_t s = 0; s < keep; ++s) {
    const auto& m = dend.merges[s];
    const std::size_t target = n + s;
    parent[find(m.a)] = target;
    parent[find(m.b)] = target;
  }
  std::vector<int> raw(n);
  std::vector<int> slot(2 * n - 1, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) slot[root] = next++;
    raw[i] = slot[root];
  }
  return canonicalize(raw, k);
}

double dunn_index(const Partition& p, const DissimilarityMatrix& d) {
  check_partition(p, d.n());
  const int k = p.k;
  if (k < 2) throw std::invalid_argument("dunn_index: need at least two clusters");

  // Average pairwise distances within and between clusters.
  std::vector<double> sum(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0.0);
  std::vector<double> cnt(sum.size(), 0.0);
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (std::size_t j = i + 1; j < d.n(); ++j) {
      const int a = std::min(p.label[i], p.label[j]);
      const int b = std::max(p.label[i], p.label[j]);
      const std::size_t idx = static_cast<std::size_t>(a) * k + b;
      sum[idx] += d.at(i, j);
      cnt[idx] += 1.0;
    }
  }
  double max_diam = 0.0;
  for (int c = 0; c < k; ++c) {
    const std::size_t idx = static_cast<std::size_t>(c) * k + c;
    const double diam = cnt[idx] > 0.0 ? sum[idx] / cnt[idx] : 0.0;  // singleton: 0
    max_diam = std::max(max_diam, diam);
  }
  if (max_diam == 0.0) return kInf;

  double min_sep = kInf;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const std::size_t idx = static_cast<std::size_t>(a) * k + b;
      min_sep = std::min(min_sep, sum[idx] / cnt[idx]);
    }
  }
  return min_sep / max_diam;
}

std::vector<double> silhouette(const Partition& p, const DissimilarityMatrix& d) {
  check_partition(p, d.n());
  const std::size_t n = d.n();
  const int k = p.k;
  std::vector<std::size_t> csize(static_cast<std::size_t>(k), 0);
  for (int l : p.label) ++csize[static_cast<std::size_t>(l)];

  std::vector<double> s(n, 0.0);
  std::vector<double> mean_to(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(mean_to.begin(), mean_to.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      mean_to[static_cast<std::size_t>(p.label[j])] += d.at(i, j);
    }
    const int own = p.label[i];
    const std::size_t own_sz = csize[static_cast<std::size_t>(own)];
    if (own_sz <= 1) {
      s[i] = 0.0;  // singleton convention
      continue;
    }
    const double a = mean_to[static_cast<std::size_t>(own)] / static_cast<double>(own_sz - 1);
    double b = kInf;
    for (int c = 0; c < k; ++c) {
      if (c == own || csize[static_cast<std::size_t>(c)] == 0) continue;
      b = std::min(b, mean_to[static_cast<std::size_t>(c)] /
                          static_cast<double>(csize[static_cast<std::size_t>(c)]));
    }
    const double denom = std::max(a, b);
    s[i] = denom > 0.0 ? (b - a) / denom : 0.0;
  }
  return s;
}

RevisionResult silhouette_revision(const Partition& p, const DissimilarityMatrix& d,
                                   int max_rounds) {
  check_partition(p, d.n());
  if (max_rounds < 1) throw std::invalid_argument("silhouette_revision: max_rounds >= 1");
  const std::size_t n = d.n();
  const int k = p.k;

  RevisionResult res;
  res.partition = p;
  for (int round = 0; round < max_rounds; ++round) {
    const std::vector<double> s = silhouette(res.partition, d);
    std::vector<std::size_t> csize(static_cast<std::size_t>(k), 0);
    for (int l : res.partition.label) ++csize[static_cast<std::size_t>(l)];

    // Collect the moves first (decisions based on the start-of-round state),
    // then apply, skipping any that would empty the source cluster.
    struct Move {
      std::size_t item;
      int to;
    };
    std::vector<Move> moves;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] >= 0.0) continue;
      std::vector<double> mean_to(static_cast<std::size_t>(k), 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) mean_to[static_cast<std::size_t>(res.partition.label[j])] += d.at(i, j);
      }
      int best = -1;
      double best_mean = kInf;
      for (int c = 0; c < k; ++c) {
        if (c == res.partition.label[i] || csize[static_cast<std::size_t>(c)] == 0) continue;
        const double m = mean_to[static_cast<std::size_t>(c)] /
                         static_cast<double>(csize[static_cast<std::size_t>(c)]);
        if (m < best_mean) {
          best_mean = m;
          best = c;
        }
      }
      if (best >= 0) moves.push_back({i, best});
    }
    if (moves.empty()) break;
    res.rounds = round + 1;
    for (const Move& mv : moves) {
      const int from = res.partition.label[mv.item];
      if (csize[static_cast<std::size_t>(from)] <= 1) {
        res.blocked.push_back(mv.item);
        continue;
      }
      res.partition.label[mv.item] = mv.to;
      --csize[static_cast<std::size_t>(from)];
      ++csize[static_cast<std::size_t>(mv.to)];
      res.moved.push_back(mv.item);
    }
  }
  return res;
}

double sim_index(const Partition& found, const Partition& truth) {
  if (found.label.size() != truth.label.size()) {
    throw std::invalid_argument("sim_index: partitions cover different item counts");
  }
  const std::size_t n = found.label.size();
  const int kf = found.k, kt = truth.k;
  std::vector<double> inter(static_cast<std::size_t>(kf) * static_cast<std::size_t>(kt), 0.0);
  std::vector<double> fsz(static_cast<std::size_t>(kf), 0.0), tsz(static_cast<std::size_t>(kt), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = static_cast<std::size_t>(found.label[i]);
    const auto t = static_cast<std::size_t>(truth.label[i]);
    inter[f * static_cast<std::size_t>(kt) + t] += 1.0;
    fsz[f] += 1.0;
    tsz[t] += 1.0;
  }
  double acc = 0.0;
  for (int t = 0; t < kt; ++t) {
    double best = 0.0;
    for (int f = 0; f < kf; ++f) {
      const double i2 = 2.0 * inter[static_cast<std::size_t>(f) * kt + t];
      best = std::max(best, i2 / (fsz[static_cast<std::size_t>(f)] +
                                  tsz[static_cast<std::size_t>(t)]));
    }
    acc += best;
  }
  return acc / static_cast<double>(kt);
}

KSelection select_k(const DissimilarityMatrix& d, int k_min, int k_max, Linkage linkage) {
  const int n = static_cast<int>(d.n());
  k_min = std::max(k_min, 2);
  k_max = std::min(k_max, n - 1);
  if (k_min > k_max) {
    throw std::invalid_argument("select_k: empty k range after clipping to [2, n-1]");
  }
  const Dendrogram dend = agglomerate(d, linkage);
  KSelection out;
  double best = -kInf;
  for (int k = k_min; k <= k_max; ++k) {
    const double v = dunn_index(cut(dend, k), d);
    out.dunn_by_k[k] = v;
    if (v > best) {  // strict: ties keep the smaller k
      best = v;
      out.k = k;
    }
  }
  return out;
}

double davies_bouldin(const Partition& p, const DissimilarityMatrix& d) {
  check_partition(p, d.n());
  const int k = p.k;
  if (k < 2) throw std::invalid_argument("davies_bouldin: need at least two clusters");
  const std::size_t n = d.n();

  // Medoid = member minimizing the mean dissimilarity to its cluster.
  std::vector<std::size_t> medoid(static_cast<std::size_t>(k));
  std::vector<double> spread(static_cast<std::size_t>(k), 0.0);
  for (int c = 0; c < k; ++c) {
    double best_mean = kInf;
    std::size_t best_item = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p.label[i] != c) continue;
      double acc = 0.0;
      std::size_t cnt = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.label[j] != c || j == i) continue;
        acc += d.at(i, j);
        ++cnt;
      }
      const double m = cnt > 0 ? acc / static_cast<double>(cnt) : 0.0;
      if (m < best_mean) {
        best_mean = m;
        best_item = i;
      }
    }
    medoid[static_cast<std::size_t>(c)] = best_item;
    spread[static_cast<std::size_t>(c)] = best_mean == kInf ? 0.0 : best_mean;
  }

  double acc = 0.0;
  for (int a = 0; a < k; ++a) {
    double worst = 0.0;
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      const double sep = d.at(medoid[static_cast<std::size_t>(a)],
                              medoid[static_cast<std::size_t>(b)]);
      if (sep <= 0.0) return kInf;
      worst = std::max(worst, (spread[static_cast<std::size_t>(a)] +
                               spread[static_cast<std::size_t>(b)]) / sep);
    }
    acc += worst;
  }
  return acc / static_cast<double>(k);
}

}  // namespace tvclust
