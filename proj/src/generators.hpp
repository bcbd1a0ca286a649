#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace dgcf {

// Joins two clusters; random edges are added between them until the merged
// cluster reaches target_density. The merged cluster takes the smaller of
// the two labels; labels above the larger one shift down by one.
struct MergeEvent {
    uint32_t cluster_a = 0;
    uint32_t cluster_b = 1;
    double target_density = 0.3;
};

// Cuts a cluster into two near-equal random halves; edges between the halves
// are deleted until the density over the original member set drops to
// target_intra_density. The first half keeps the old label, the second half
// becomes the new highest label.
struct SplitEvent {
    uint32_t cluster = 0;
    double target_intra_density = 0.165;
};

using ClusterEvent = std::variant<MergeEvent, SplitEvent>;

struct ClusterGenSpec {
    uint32_t base_vertex_count = 10; // in [1, 30]
    uint32_t min_cluster_size = 10;  // >= 2
    uint32_t max_cluster_size = 40;
    double intra_density = 0.3;      // in (0, 1]
    uint32_t inter_edge_count = 3;   // cross edges per base edge
    std::vector<ClusterEvent> events;
    uint64_t seed = 0;
};

// Expands each vertex of a random connected base graph into a dense cluster,
// then applies the events to produce the second slice. Both ground-truth
// clusterings are attached. Event cluster ids refer to the clustering state
// at application time.
DynamicPair gen_cluster_pair(const ClusterGenSpec& spec);

enum class Backbone {
    Tree, // random tree grown by attaching to one of the last few vertices
    Path, // a path over randomly relabeled vertices
};

struct DistanceGenSpec {
    uint32_t vertex_count = 60; // in [20, 300]
    Backbone backbone = Backbone::Tree;
    uint32_t shortcut_count = 3;
    double diameter_ratio = 0.5; // required diam(G2)/diam(G1) when shortcuts > 0
    uint32_t min_diameter = 8;   // floor for diam(G1)
    uint64_t seed = 0;
};

// Builds a long-diameter first slice, then adds shortcut_count chords, each
// joining a currently farthest vertex pair. The second slice is an edge
// superset of the first; no clusterings are attached.
DynamicPair gen_distance_pair(const DistanceGenSpec& spec);

} // namespace dgcf
