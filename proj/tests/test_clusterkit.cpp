// Agglomerative clustering, partition scores and validity indices.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "batteries.hpp"
#include "tvclust/cluster.hpp"
#include "tvclust/rng.hpp"

using namespace tvclust;

namespace {

DissimilarityMatrix from_positions(const std::vector<double>& pos) {
  const std::size_t n = pos.size();
  std::vector<double> cells(n * n, 0.0);
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = std::abs(pos[i] - pos[j]);
  }
  return DissimilarityMatrix(ids, cells, "test");
}

DissimilarityMatrix random_matrix(std::size_t n, Rng& rng) {
  std::vector<double> cells(n * n, 0.0);
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = std::to_string(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.01 + rng.uniform();
      cells[i * n + j] = cells[j * n + i] = v;
    }
  }
  return DissimilarityMatrix(ids, cells, "test");
}

// Clusters as a set of item sets, which is label-invariant.
std::set<std::set<std::size_t>> as_sets(const Partition& p) {
  std::vector<std::set<std::size_t>> by_label(static_cast<std::size_t>(p.k));
  for (std::size_t i = 0; i < p.label.size(); ++i) {
    by_label[static_cast<std::size_t>(p.label[i])].insert(i);
  }
  return {by_label.begin(), by_label.end()};
}

Partition make_partition(std::vector<int> labels, int k) {
  Partition p;
  p.label = std::move(labels);
  p.k = k;
  return p;
}

}  // namespace

TEST_CASE("agglomerate/cut: oracle battery over exhaustive small instances") {
  const auto r = tvclust::testing::cluster_oracle_battery();
  INFO(r.note);
  CHECK(r.ok);
}

TEST_CASE("agglomerate: two items merge once at their distance") {
  const DissimilarityMatrix d = from_positions({0.0, 3.5});
  for (const Linkage l : {Linkage::complete, Linkage::average}) {
    const Dendrogram dend = agglomerate(d, l);
    REQUIRE(dend.merges.size() == 1);
    CHECK(dend.merges[0].a == 0);
    CHECK(dend.merges[0].b == 1);
    CHECK(dend.merges[0].height == 3.5);
  }
}

TEST_CASE("agglomerate: merge trace on two separated pairs") {
  // Ties at height 1 resolve toward the smallest id pair, so (0,1) precedes
  // (2,3); the last merge joins the two pair-clusters (ids 4 and 5).
  const DissimilarityMatrix d = from_positions({0.0, 1.0, 10.0, 11.0});
  const Dendrogram dend = agglomerate(d, Linkage::complete);
  REQUIRE(dend.merges.size() == 3);
  CHECK(dend.merges[0].a == 0);
  CHECK(dend.merges[0].b == 1);
  CHECK(dend.merges[0].height == 1.0);
  CHECK(dend.merges[1].a == 2);
  CHECK(dend.merges[1].b == 3);
  CHECK(dend.merges[1].height == 1.0);
  CHECK(dend.merges[2].a == 4);
  CHECK(dend.merges[2].b == 5);
  CHECK(dend.merges[2].height == 11.0);  // complete linkage: |0 - 11|

  CHECK(cut(dend, 2).label == std::vector<int>{0, 0, 1, 1});
  CHECK(cut(dend, 1).label == std::vector<int>{0, 0, 0, 0});
  CHECK(cut(dend, 4).label == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(cut(dend, 0), std::invalid_argument);
  CHECK_THROWS_AS(cut(dend, 5), std::invalid_argument);

  // Average linkage joins the pairs at the mean of the four cross distances.
  const Dendrogram avg = agglomerate(d, Linkage::average);
  CHECK(avg.merges[2].height == doctest::Approx((10.0 + 11.0 + 9.0 + 10.0) / 4.0));
}

TEST_CASE("agglomerate: duplicate items merge first at height zero") {
  std::vector<double> cells = {0, 2, 0, 2, 0, 2, 0, 2, 0};
  const DissimilarityMatrix d({"a", "b", "c"}, cells, "test");
  const Dendrogram dend = agglomerate(d, Linkage::average);
  CHECK(dend.merges[0].a == 0);
  CHECK(dend.merges[0].b == 2);
  CHECK(dend.merges[0].height == 0.0);
}

TEST_CASE("agglomerate: merge heights never decrease") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const DissimilarityMatrix d = random_matrix(9, rng);
    for (const Linkage l : {Linkage::complete, Linkage::average}) {
      const Dendrogram dend = agglomerate(d, l);
      for (std::size_t s = 1; s < dend.merges.size(); ++s) {
        CHECK(dend.merges[s].height >= dend.merges[s - 1].height);
      }
    }
  }
}

TEST_CASE("agglomerate/cut: invariant under item relabeling") {
  Rng rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 6;
    const DissimilarityMatrix d = random_matrix(n, rng);

    // Apply a fixed permutation sigma: item i of the permuted problem is item
    // sigma[i] of the original.
    const std::vector<std::size_t> sigma = {3, 0, 5, 1, 4, 2};
    std::vector<double> cells(n * n);
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = std::to_string(i);
      for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = d.at(sigma[i], sigma[j]);
    }
    const DissimilarityMatrix dp(ids, cells, "test");

    for (const Linkage l : {Linkage::complete, Linkage::average}) {
      for (int k = 2; k <= 4; ++k) {
        const Partition orig = cut(agglomerate(d, l), k);
        const Partition perm = cut(agglomerate(dp, l), k);
        // Map the permuted labels back onto original item indices.
        std::vector<int> back(n);
        for (std::size_t i = 0; i < n; ++i) back[sigma[i]] = perm.label[i];
        CHECK(as_sets(make_partition(back, k)) == as_sets(orig));
      }
    }
  }
}

TEST_CASE("cut: partitions are nested as k grows") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const DissimilarityMatrix d = random_matrix(8, rng);
    const Dendrogram dend = agglomerate(d, Linkage::average);
    for (int k = 2; k < 8; ++k) {
      const auto coarse = as_sets(cut(dend, k));
      const auto fine = as_sets(cut(dend, k + 1));
      for (const auto& cluster : fine) {
        const bool contained =
            std::any_of(coarse.begin(), coarse.end(), [&](const std::set<std::size_t>& c) {
              return std::includes(c.begin(), c.end(), cluster.begin(), cluster.end());
            });
        CHECK(contained);
      }
    }
  }
}

TEST_CASE("clustering pipeline: invariant under scaling the matrix") {
  Rng rng(99);
  const DissimilarityMatrix d = random_matrix(10, rng);
  std::vector<double> scaled_cells = d.values();
  const double c = 37.25;
  for (double& v : scaled_cells) v *= c;
  const DissimilarityMatrix dc(d.ids(), scaled_cells, "test");

  for (const Linkage l : {Linkage::complete, Linkage::average}) {
    const Dendrogram a = agglomerate(d, l);
    const Dendrogram b = agglomerate(dc, l);
    for (std::size_t s = 0; s < a.merges.size(); ++s) {
      CHECK(a.merges[s].a == b.merges[s].a);
      CHECK(a.merges[s].b == b.merges[s].b);
      CHECK(b.merges[s].height == doctest::Approx(c * a.merges[s].height).epsilon(1e-12));
    }
    for (int k = 2; k <= 5; ++k) {
      const Partition pa = cut(a, k);
      CHECK(pa.label == cut(b, k).label);
      // Dunn scales out; silhouettes are ratios and match exactly.
      CHECK(dunn_index(pa, d) == doctest::Approx(dunn_index(pa, dc)).epsilon(1e-12));
      const std::vector<double> sa = silhouette(pa, d);
      const std::vector<double> sb = silhouette(pa, dc);
      for (std::size_t i = 0; i < sa.size(); ++i) {
        CHECK(sa[i] == doctest::Approx(sb[i]).epsilon(1e-12));
      }
    }
    CHECK(select_k(d, 2, 6, l).k == select_k(dc, 2, 6, l).k);
  }
}

TEST_CASE("sim index: closed-form agreement scores") {
  const auto r = tvclust::testing::sim_index_battery();
  INFO(r.note);
  CHECK(r.ok);
  CHECK_THROWS_AS(sim_index(make_partition({0, 1}, 2), make_partition({0, 1, 0}, 2)),
                  std::invalid_argument);
}

TEST_CASE("validity indices: hand-computed examples") {
  const auto r = tvclust::testing::validity_index_battery();
  INFO(r.note);
  CHECK(r.ok);
}

TEST_CASE("dunn index: input validation") {
  const DissimilarityMatrix d = from_positions({0.0, 1.0, 2.0});
  CHECK_THROWS_AS(dunn_index(make_partition({0, 0, 0}, 1), d), std::invalid_argument);
  CHECK_THROWS_AS(dunn_index(make_partition({0, 1}, 2), d), std::invalid_argument);
  CHECK_THROWS_AS(dunn_index(make_partition({0, 2, 2}, 3), d), std::invalid_argument);
}

TEST_CASE("silhouette revision: separated clusters are a fixed point") {
  const DissimilarityMatrix d = from_positions({0.0, 1.0, 10.0, 11.0});
  const Partition p = make_partition({0, 0, 1, 1}, 2);
  const RevisionResult r = silhouette_revision(p, d);
  CHECK(r.partition.label == p.label);
  CHECK(r.moved.empty());
  CHECK(r.blocked.empty());
  CHECK(r.rounds == 0);
}

TEST_CASE("silhouette revision: relocates a misassigned item") {
  // Item 2 (position 8) is labeled with the far-left pair; its silhouette is
  // negative and the revision moves it to the right-hand cluster.
  const DissimilarityMatrix d = from_positions({0.0, 1.0, 8.0, 9.0, 10.0});
  const Partition p = make_partition({0, 0, 0, 1, 1}, 2);
  const RevisionResult r = silhouette_revision(p, d);
  CHECK(r.partition.label == std::vector<int>{0, 0, 1, 1, 1});
  CHECK(r.moved == std::vector<std::size_t>{2});
  CHECK(r.blocked.empty());
  CHECK(r.rounds == 1);

  // The revised partition is itself a fixed point.
  const RevisionResult r2 = silhouette_revision(r.partition, d);
  CHECK(r2.moved.empty());
  CHECK(r2.rounds == 0);
}

TEST_CASE("silhouette revision: never empties a cluster") {
  // Both members of the left cluster want to defect (each sits closer to the
  // middle trio than to its far-away partner); the second move would empty the
  // cluster and is blocked.
  const DissimilarityMatrix d = from_positions({0.0, 20.0, 9.0, 10.0, 11.0});
  const Partition p = make_partition({0, 0, 1, 1, 1}, 2);
  const RevisionResult r = silhouette_revision(p, d);
  CHECK(r.moved == std::vector<std::size_t>{0});
  CHECK(r.blocked == std::vector<std::size_t>{1});
  CHECK(r.partition.label == std::vector<int>{1, 0, 1, 1, 1});
  CHECK(r.rounds == 1);
  CHECK_THROWS_AS(silhouette_revision(p, d, 0), std::invalid_argument);
}

TEST_CASE("select_k: recovers planted structure and breaks ties downward") {
  // Two clear blobs among eight items.
  const DissimilarityMatrix blobs =
      from_positions({0.0, 0.5, 1.0, 1.5, 50.0, 50.5, 51.0, 51.5});
  const KSelection two = select_k(blobs, 2, 6, Linkage::complete);
  CHECK(two.k == 2);
  CHECK(two.dunn_by_k.size() == 5);
  CHECK(two.dunn_by_k.at(2) > two.dunn_by_k.at(3));

  const KSelection line = select_k(from_positions({0.0, 1.0, 10.0, 11.0}), 2, 3,
                                   Linkage::complete);
  CHECK(line.k == 2);

  // All pairwise distances equal: every k scores the same Dunn value, so the
  // tie resolves to the smallest candidate.
  const std::size_t n = 5;
  std::vector<double> cells(n * n, 1.0);
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = std::to_string(i);
    cells[i * n + i] = 0.0;
  }
  const DissimilarityMatrix flat(ids, cells, "test");
  const KSelection tied = select_k(flat, 2, 4, Linkage::complete);
  CHECK(tied.k == 2);
  for (const auto& [k, v] : tied.dunn_by_k) CHECK(v == doctest::Approx(1.0));

  CHECK_THROWS_AS(select_k(flat, 6, 10, Linkage::complete), std::invalid_argument);
}

TEST_CASE("davies-bouldin: lower for the natural split") {
  const DissimilarityMatrix d = from_positions({0.0, 1.0, 10.0, 11.0});
  const double natural = davies_bouldin(make_partition({0, 0, 1, 1}, 2), d);
  const double interleaved = davies_bouldin(make_partition({0, 1, 0, 1}, 2), d);
  CHECK(std::isfinite(natural));
  CHECK(natural >= 0.0);
  CHECK(natural < interleaved);
}
