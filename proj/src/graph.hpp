#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"

namespace dgcf {

using VertexId = uint32_t;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double euclidean(Point a, Point b);

// One time slice of a dynamic graph: undirected, unweighted, no self-loops.
// Edges are stored normalized (u < v), sorted, and unique.
struct TimeSlice {
    uint32_t vertex_count = 0;
    EdgeList edges;
};

// Validates and canonicalizes the edge list.
TimeSlice make_slice(uint32_t vertex_count, EdgeList edges);

std::vector<std::vector<VertexId>> adjacency_lists(const TimeSlice& slice);

bool is_connected(const TimeSlice& slice);

/// A partition of the vertex set. Labels are compact: every value in
// [0, cluster_count) occurs at least once.
struct Clustering {
    std::vector<uint32_t> labels;
    uint32_t cluster_count = 0;
};

Clustering make_clustering(std::vector<uint32_t> labels);

// Two time slices over a shared vertex set, optionally with ground-truth
// clusterings per slice.
struct DynamicPair {
    TimeSlice slice1;
    TimeSlice slice2;
    std::optional<Clustering> clustering1;
    std::optional<Clustering> clustering2;
};

DynamicPair make_pair(TimeSlice slice1, TimeSlice slice2,
                      std::optional<Clustering> clustering1 = std::nullopt,
                      std::optional<Clustering> clustering2 = std::nullopt);

// 2D positions, one per vertex of the slice being drawn.
struct Drawing {
    std::vector<Point> positions;
};

Drawing make_drawing(std::vector<Point> positions);

// Symmetric matrix with zero diagonal; hop counts or drawing units.
struct DistanceMatrix {
    uint32_t n = 0;
    std::vector<double> values; // row-major n*n

    double at(uint32_t i, uint32_t j) const {
        return values[static_cast<size_t>(i) * n + j];
    }
    double& at(uint32_t i, uint32_t j) {
        return values[static_cast<size_t>(i) * n + j];
    }
};

// Minimum hop counts via one BFS per source.
// Throws DisconnectedGraph with a representative unreachable component.
DistanceMatrix all_pairs_graph_distance(const TimeSlice& slice);

// Maximum hop count between any vertex pair; requires vertex_count >= 2.
uint32_t diameter(const TimeSlice& slice);
uint32_t diameter(const DistanceMatrix& hops);

DistanceMatrix all_pairs_geometric_distance(const Drawing& drawing);

// Pooled mean drawn length of slice1's edges in d1 and slice2's edges in d2.
double average_edge_length(const Drawing& d1, const Drawing& d2,
                           const DynamicPair& pair);

// Larger dimension of the axis-aligned bounding box.
double bounding_box_size(const Drawing& drawing);

} // namespace dgcf
