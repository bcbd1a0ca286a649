#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace dgcf {

enum class ClusterIndex { Ari, Fmi };

// Cross-tabulation of two partitions of the same element set.
struct ContingencyTable {
    uint32_t rows = 0; // clusters of partition A
    uint32_t cols = 0; // clusters of partition B
    uint64_t n = 0;
    std::vector<uint64_t> counts; // row-major rows*cols

    uint64_t at(uint32_t i, uint32_t j) const {
        return counts[static_cast<size_t>(i) * cols + j];
    }
};

ContingencyTable contingency_table(const Clustering& a, const Clustering& b);

// Chance-corrected pair-agreement similarity in [-1, 1]. Degenerate
// denominator: 1 for identical partitions, 0 otherwise.
double adjusted_rand_index(const Clustering& a, const Clustering& b);

// TP / sqrt((TP+FP)(TP+FN)) over element pairs, in [0, 1]. Both partitions
// all-singletons counts as perfect agreement.
double fowlkes_mallows_index(const Clustering& a, const Clustering& b);

double cluster_index(const Clustering& a, const Clustering& b,
                     ClusterIndex index);

// Lloyd iterations with k-means++ seeding; 10 restarts on sub-seeds derived
// from `seed`, best inertia wins (ties to the earliest restart). Deterministic
// for a fixed seed. Requires k <= number of distinct points.
Clustering kmeans(const std::vector<Point>& points, uint32_t k, uint64_t seed);

Clustering geometric_clustering(const Drawing& drawing, uint32_t k,
                                uint64_t seed);

// Static cluster faithfulness: similarity between the ground truth and the
// geometric clustering recovered from the drawing with k = ground-truth
// cluster count.
double cq(const Clustering& ground_truth, const Drawing& drawing,
          ClusterIndex index, uint64_t seed);

} // namespace dgcf
