#pragma once

#include <cstdint>
#include <vector>

#include "cluster_compare.hpp"
#include "graph.hpp"

namespace dgcf {

// Inputs for the cluster-change comparison: ground-truth clusterings of the
// two slices and geometric clusterings recovered from their drawings.
struct ClusterChangeInput {
    Clustering truth1;
    Clustering truth2;
    Clustering geo1;
    Clustering geo2;
};

// Inputs for the distance-change comparisons. Matrices are over the shared
// vertex set; target_edge_length pools edges of both slices.
struct DistanceChangeInput {
    DistanceMatrix graph1;
    DistanceMatrix graph2;
    DistanceMatrix geo1;
    DistanceMatrix geo2;
    double target_edge_length = 0.0;
};

// clamp(index, 0, 1): the agreement score standing in for the change between
// two clusterings of one vertex set. Using the raw score keeps ARI's chance
// correction visible in ccq, so heavily distorted drawings pull ccq_ari
// below ccq_fmi instead of both bottoming out identically.
double clustering_change(const Clustering& a, const Clustering& b,
                         ClusterIndex index);

// How faithfully the drawings replay the clustering change between slices.
double ccq(const ClusterChangeInput& input, ClusterIndex index);

// Convenience: recover geometric clusterings from the drawings with k-means
// (k from each slice's ground truth), then score.
double ccq(const DynamicPair& pair, const Drawing& d1, const Drawing& d2,
           ClusterIndex index, uint64_t seed1, uint64_t seed2);

// Distance-change faithfulness, absolute-change variant.
double dcq1(const DistanceChangeInput& input);
double dcq1(const DynamicPair& pair, const Drawing& d1, const Drawing& d2);

// Distance-change faithfulness, normalized variant. diam1/diam2 are the
// graph-theoretic diameters of the two slices.
double dcq2(const DistanceChangeInput& input, uint32_t diam1, uint32_t diam2);
double dcq2(const DynamicPair& pair, const Drawing& d1, const Drawing& d2);

// Per-pair penalty terms (i < j in row-major order), exposed so the summed
// metrics can be cross-checked term by term.
std::vector<double> dcq1_pair_penalties(const DistanceChangeInput& input);
std::vector<double> dcq2_pair_penalties(const DistanceChangeInput& input,
                                        uint32_t diam1, uint32_t diam2);

// Normalized stress of a drawing against graph distances, with the optimal
// scale factor applied. Weights are delta^-2.
double stress(const TimeSlice& slice, const Drawing& drawing);
double stress(const DistanceMatrix& graph, const Drawing& drawing);

} // namespace dgcf
