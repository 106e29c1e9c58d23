#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tvclust/distance.hpp"

namespace tvclust {

enum class Linkage { complete, average };

// Agglomerative merge history.  Leaves are 0..n-1; the cluster created by
// merges[s] gets id n + s (a < b always).  Heights are non-decreasing for the
// monotone linkages implemented here (checked after every run).
struct Dendrogram {
  struct Merge {
    std::size_t a = 0;
    std::size_t b = 0;
    double height = 0.0;
  };
  std::size_t n_leaves = 0;
  std::vector<Merge> merges;
};

// Stored-matrix agglomeration with Lance-Williams updates.  Ties on the merge
// height are broken toward the lexicographically smallest (a, b) id pair.
Dendrogram agglomerate(const DissimilarityMatrix& d, Linkage linkage);

// Flat clustering with labels 0..k-1, each cluster nonempty.  Labels are
// canonical: cluster containing the lowest item index gets label 0, and so on
// by first occurrence.
struct Partition {
  std::vector<int> label;
  int k = 0;
};

// Partition induced by undoing the k-1 highest merges.
Partition cut(const Dendrogram& dend, int k);

// Dunn validity index with average inter-cluster distance and average
// intra-cluster diameter.  Singletons have diameter 0; if every diameter is 0
// the index is +infinity.
double dunn_index(const Partition& p, const DissimilarityMatrix& d);

// Per-item silhouette widths s(i) = (b - a)/max(a, b); items in singleton
// clusters get s = 0.
std::vector<double> silhouette(const Partition& p, const DissimilarityMatrix& d);

// Reassigns every item with negative silhouette width to the cluster that
// attains its b(i), all moves applied per round; a move that would empty a
// cluster is skipped and recorded.  Runs at most max_rounds rounds (default
// one), stopping early when no item moves.
struct RevisionResult {
  Partition partition;
  std::vector<std::size_t> moved;    // item indices relocated (any round)
  std::vector<std::size_t> blocked;  // retained to keep a cluster nonempty
  int rounds = 0;
};
RevisionResult silhouette_revision(const Partition& p, const DissimilarityMatrix& d,
                                   int max_rounds = 1);

// Agreement between a found partition and ground truth:
//   Sim = (1/g) sum_i max_j 2|C_j ∩ G_i| / (|C_j| + |G_i|),  in [0, 1],
// equal to 1 exactly when the partitions coincide.
double sim_index(const Partition& found, const Partition& truth);

// Picks k in [k_min, k_max] maximizing the Dunn index of cut(agglomerate(d), k);
// ties resolve toward smaller k.
struct KSelection {
  int k = 0;
  std::map<int, double> dunn_by_k;
};
KSelection select_k(const DissimilarityMatrix& d, int k_min, int k_max, Linkage linkage);

// Davies-Bouldin index in the medoid form for dissimilarity data (lower is
// better).  Shipped as an optional diagnostic; not used by selection.
double davies_bouldin(const Partition& p, const DissimilarityMatrix& d);

}  // namespace tvclust
