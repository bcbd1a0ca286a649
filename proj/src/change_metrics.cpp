#include "change_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dgcf {

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

void check_square_inputs(const DistanceChangeInput& input) {
    uint32_t n = input.graph1.n;
    if (n < 2) {
        raise(ErrorCode::InvalidArgument,
              "distance change needs at least 2 vertices");
    }
    if (input.graph2.n != n || input.geo1.n != n || input.geo2.n != n) {
        raise(ErrorCode::SizeMismatch,
              "distance matrices cover different vertex sets");
    }
}

double max_pairwise(const DistanceMatrix& m) {
    double best = 0.0;
    for (uint32_t i = 0; i < m.n; ++i) {
        for (uint32_t j = i + 1; j < m.n; ++j) {
            best = std::max(best, m.at(i, j));
        }
    }
    return best;
}

// |a - b| / max(a, b), with 0 when both are 0.
double relative_change(double a, double b) {
    double mx = std::max(a, b);
    if (mx == 0.0) {
        return 0.0;
    }
    return std::abs(a - b) / mx;
}

} // namespace

double clustering_change(const Clustering& a, const Clustering& b,
                         ClusterIndex index) {
    return clamp01(cluster_index(a, b, index));
}

double ccq(const ClusterChangeInput& input, ClusterIndex index) {
    double data_change = clustering_change(input.truth1, input.truth2, index);
    double geo_change = clustering_change(input.geo1, input.geo2, index);
    double mx = std::max(data_change, geo_change);
    if (mx == 0.0) {
        return 1.0; // both sides scored 0: changes agree exactly
    }
    return 1.0 - std::abs(data_change - geo_change) / mx;
}

double ccq(const DynamicPair& pair, const Drawing& d1, const Drawing& d2,
           ClusterIndex index, uint64_t seed1, uint64_t seed2) {
    if (!pair.clustering1 || !pair.clustering2) {
        raise(ErrorCode::InvalidArgument,
              "pair carries no ground-truth clusterings");
    }
    if (d1.positions.size() != pair.slice1.vertex_count ||
        d2.positions.size() != pair.slice2.vertex_count) {
        raise(ErrorCode::SizeMismatch,
              "drawing size does not match slice vertex count");
    }
    ClusterChangeInput input;
    input.truth1 = *pair.clustering1;
    input.truth2 = *pair.clustering2;
    input.geo1 = geometric_clustering(d1, input.truth1.cluster_count, seed1);
    input.geo2 = geometric_clustering(d2, input.truth2.cluster_count, seed2);
    return ccq(input, index);
}

std::vector<double> dcq1_pair_penalties(const DistanceChangeInput& input) {
    check_square_inputs(input);
    if (!(input.target_edge_length > 0.0)) {
        raise(ErrorCode::DegenerateDrawing,
              "target edge length must be positive");
    }
    uint32_t n = input.graph1.n;
    std::vector<double> penalties;
    penalties.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            double data_change =
                relative_change(input.graph1.at(i, j), input.graph2.at(i, j));
            double geo_change =
                relative_change(input.geo1.at(i, j), input.geo2.at(i, j));
            penalties.push_back(
                std::abs(data_change - geo_change / input.target_edge_length));
        }
    }
    return penalties;
}

double dcq1(const DistanceChangeInput& input) {
    std::vector<double> penalties = dcq1_pair_penalties(input);
    uint32_t n = input.graph1.n;
    double sum = 0.0;
    for (double p : penalties) {
        sum += p;
    }
    return 1.0 - 2.0 * sum / (static_cast<double>(n) * n);
}

double dcq1(const DynamicPair& pair, const Drawing& d1, const Drawing& d2) {
    DistanceChangeInput input;
    input.graph1 = all_pairs_graph_distance(pair.slice1);
    input.graph2 = all_pairs_graph_distance(pair.slice2);
    input.geo1 = all_pairs_geometric_distance(d1);
    input.geo2 = all_pairs_geometric_distance(d2);
    input.target_edge_length = average_edge_length(d1, d2, pair);
    return dcq1(input);
}

std::vector<double> dcq2_pair_penalties(const DistanceChangeInput& input,
                                        uint32_t diam1, uint32_t diam2) {
    check_square_inputs(input);
    if (diam1 == 0 || diam2 == 0) {
        raise(ErrorCode::InvalidArgument, "graph diameter must be positive");
    }
    double geo_max1 = max_pairwise(input.geo1);
    double geo_max2 = max_pairwise(input.geo2);
    if (geo_max1 == 0.0 || geo_max2 == 0.0) {
        raise(ErrorCode::DegenerateDrawing,
              "all drawing positions coincide");
    }
    uint32_t n = input.graph1.n;
    std::vector<double> penalties;
    penalties.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            double data_change = std::abs(input.graph1.at(i, j) / diam1 -
                                          input.graph2.at(i, j) / diam2);
            double geo_change = std::abs(input.geo1.at(i, j) / geo_max1 -
                                         input.geo2.at(i, j) / geo_max2);
            penalties.push_back(std::abs(data_change - geo_change));
        }
    }
    return penalties;
}

double dcq2(const DistanceChangeInput& input, uint32_t diam1,
            uint32_t diam2) {
    std::vector<double> penalties =
        dcq2_pair_penalties(input, diam1, diam2);
    uint32_t n = input.graph1.n;
    double sum = 0.0;
    for (double p : penalties) {
        sum += p;
    }
    return 1.0 - 2.0 * sum / (static_cast<double>(n) * n);
}

double dcq2(const DynamicPair& pair, const Drawing& d1, const Drawing& d2) {
    DistanceChangeInput input;
    input.graph1 = all_pairs_graph_distance(pair.slice1);
    input.graph2 = all_pairs_graph_distance(pair.slice2);
    input.geo1 = all_pairs_geometric_distance(d1);
    input.geo2 = all_pairs_geometric_distance(d2);
    uint32_t diam1 = diameter(input.graph1);
    uint32_t diam2 = diameter(input.graph2);
    return dcq2(input, diam1, diam2);
}

double stress(const DistanceMatrix& graph, const Drawing& drawing) {
    if (graph.n != drawing.positions.size()) {
        raise(ErrorCode::SizeMismatch,
              "distance matrix and drawing cover different vertex sets");
    }
    if (graph.n < 2) {
        raise(ErrorCode::InvalidArgument, "stress needs at least 2 vertices");
    }
    double sw_sd = 0.0; // sum w * s * delta
    double sw_ss = 0.0; // sum w * s^2
    uint64_t pair_count = 0;
    for (uint32_t i = 0; i < graph.n; ++i) {
        for (uint32_t j = i + 1; j < graph.n; ++j) {
            double delta = graph.at(i, j);
            double s = euclidean(drawing.positions[i], drawing.positions[j]);
            double w = 1.0 / (delta * delta);
            sw_sd += w * s * delta;
            sw_ss += w * s * s;
            ++pair_count;
        }
    }
    double alpha = sw_ss == 0.0 ? 0.0 : sw_sd / sw_ss;
    double numerator = 0.0;
    for (uint32_t i = 0; i < graph.n; ++i) {
        for (uint32_t j = i + 1; j < graph.n; ++j) {
            double delta = graph.at(i, j);
            double s = euclidean(drawing.positions[i], drawing.positions[j]);
            double r = alpha * s - delta;
            numerator += r * r / (delta * delta);
        }
    }
    // sum w * delta^2 over pairs is exactly the pair count
    return numerator / static_cast<double>(pair_count);
}

double stress(const TimeSlice& slice, const Drawing& drawing) {
    return stress(all_pairs_graph_distance(slice), drawing);
}

} // namespace dgcf
