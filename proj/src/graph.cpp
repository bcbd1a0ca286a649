#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace dgcf {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::DegenerateDrawing: return "DegenerateDrawing";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::LayoutNotFaithful: return "LayoutNotFaithful";
    case ErrorCode::InvalidEdgeSet: return "InvalidEdgeSet";
    case ErrorCode::MissingCoordinates: return "MissingCoordinates";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

double euclidean(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

TimeSlice make_slice(uint32_t vertex_count, EdgeList edges) {
    if (vertex_count == 0) {
        raise(ErrorCode::InvalidArgument, "vertex count must be positive");
    }
    for (auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            raise(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") has endpoint outside [0, " +
                      std::to_string(vertex_count) + ")");
        }
        if (u == v) {
            raise(ErrorCode::InvalidArgument,
                  "self-loop at vertex " + std::to_string(u));
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) {
        raise(ErrorCode::InvalidArgument,
              "duplicate edge (" + std::to_string(dup->first) + ", " +
                  std::to_string(dup->second) + ")");
    }
    return TimeSlice{vertex_count, std::move(edges)};
}

std::vector<std::vector<VertexId>> adjacency_lists(const TimeSlice& slice) {
    std::vector<std::vector<VertexId>> adj(slice.vertex_count);
    for (const auto& [u, v] : slice.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

namespace {

// BFS hop counts from one source; untouched entries stay at UINT32_MAX.
std::vector<uint32_t> bfs_hops(const std::vector<std::vector<VertexId>>& adj,
                               VertexId source) {
    std::vector<uint32_t> dist(adj.size(), UINT32_MAX);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop();
        for (VertexId v : adj[u]) {
            if (dist[v] == UINT32_MAX) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

[[noreturn]] void raise_disconnected(const std::vector<uint32_t>& from_zero) {
    // Name the component that is cut off from vertex 0.
    std::string members;
    size_t shown = 0;
    size_t total = 0;
    for (uint32_t v = 0; v < from_zero.size(); ++v) {
        if (from_zero[v] == UINT32_MAX) {
            ++total;
            if (shown < 8) {
                if (!members.empty()) {
                    members += ", ";
                }
                members += std::to_string(v);
                ++shown;
            }
        }
    }
    if (total > shown) {
        members += ", ...";
    }
    raise(ErrorCode::DisconnectedGraph,
          "graph is disconnected: " + std::to_string(total) +
              " vertices unreachable from vertex 0 (component contains " +
              members + ")");
}

} // namespace

bool is_connected(const TimeSlice& slice) {
    auto dist = bfs_hops(adjacency_lists(slice), 0);
    return std::find(dist.begin(), dist.end(), UINT32_MAX) == dist.end();
}

DistanceMatrix all_pairs_graph_distance(const TimeSlice& slice) {
    const uint32_t n = slice.vertex_count;
    auto adj = adjacency_lists(slice);

    auto from_zero = bfs_hops(adj, 0);
    if (std::find(from_zero.begin(), from_zero.end(), UINT32_MAX) !=
        from_zero.end()) {
        raise_disconnected(from_zero);
    }

    DistanceMatrix m;
    m.n = n;
    m.values.assign(static_cast<size_t>(n) * n, 0.0);
    for (uint32_t s = 0; s < n; ++s) {
        auto dist = (s == 0) ? from_zero : bfs_hops(adj, s);
        for (uint32_t v = 0; v < n; ++v) {
            m.at(s, v) = static_cast<double>(dist[v]);
        }
    }
    return m;
}

uint32_t diameter(const TimeSlice& slice) {
    if (slice.vertex_count < 2) {
        raise(ErrorCode::InvalidArgument,
              "diameter requires at least two vertices");
    }
    return diameter(all_pairs_graph_distance(slice));
}

uint32_t diameter(const DistanceMatrix& hops) {
    if (hops.n < 2) {
        raise(ErrorCode::InvalidArgument,
              "diameter requires at least two vertices");
    }
    double best = 0.0;
    for (double d : hops.values) {
        best = std::max(best, d);
    }
    return static_cast<uint32_t>(best);
}

Drawing make_drawing(std::vector<Point> positions) {
    for (size_t i = 0; i < positions.size(); ++i) {
        if (!std::isfinite(positions[i].x) || !std::isfinite(positions[i].y)) {
            raise(ErrorCode::InvalidArgument,
                  "non-finite coordinate at vertex " + std::to_string(i));
        }
    }
    return Drawing{std::move(positions)};
}

DistanceMatrix all_pairs_geometric_distance(const Drawing& drawing) {
    const uint32_t n = static_cast<uint32_t>(drawing.positions.size());
    DistanceMatrix m;
    m.n = n;
    m.values.assign(static_cast<size_t>(n) * n, 0.0);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            double d = euclidean(drawing.positions[i], drawing.positions[j]);
            m.at(i, j) = d;
            m.at(j, i) = d;
        }
    }
    return m;
}

Clustering make_clustering(std::vector<uint32_t> labels) {
    if (labels.empty()) {
        raise(ErrorCode::InvalidArgument, "clustering must cover >= 1 vertex");
    }
    uint32_t max_label = *std::max_element(labels.begin(), labels.end());
    if (max_label == UINT32_MAX) {
        raise(ErrorCode::InvalidArgument, "cluster label out of range");
    }
    std::vector<bool> seen(static_cast<size_t>(max_label) + 1, false);
    for (uint32_t label : labels) {
        seen[label] = true;
    }
    for (uint32_t label = 0; label <= max_label; ++label) {
        if (!seen[label]) {
            raise(ErrorCode::InvalidArgument,
                  "cluster labels are not compact: label " +
                      std::to_string(label) + " is unused");
        }
    }
    return Clustering{std::move(labels), max_label + 1};
}

DynamicPair make_pair(TimeSlice slice1, TimeSlice slice2,
                      std::optional<Clustering> clustering1,
                      std::optional<Clustering> clustering2) {
    if (slice1.vertex_count != slice2.vertex_count) {
        raise(ErrorCode::SizeMismatch,
              "time slices must share one vertex set (" +
                  std::to_string(slice1.vertex_count) + " vs " +
                  std::to_string(slice2.vertex_count) + ")");
    }
    const size_t n = slice1.vertex_count;
    for (int which = 1; which <= 2; ++which) {
        const auto& c = (which == 1) ? clustering1 : clustering2;
        if (c && c->labels.size() != n) {
            raise(ErrorCode::SizeMismatch,
                  "clustering" + std::to_string(which) + " covers " +
                      std::to_string(c->labels.size()) + " vertices, expected " +
                      std::to_string(n));
        }
    }
    return DynamicPair{std::move(slice1), std::move(slice2),
                       std::move(clustering1), std::move(clustering2)};
}

double average_edge_length(const Drawing& d1, const Drawing& d2,
                           const DynamicPair& pair) {
    if (pair.slice1.edges.empty() || pair.slice2.edges.empty()) {
        raise(ErrorCode::InvalidArgument,
              "average edge length needs >= 1 edge in each slice");
    }
    double sum = 0.0;
    for (const auto& [u, v] : pair.slice1.edges) {
        sum += euclidean(d1.positions[u], d1.positions[v]);
    }
    for (const auto& [u, v] : pair.slice2.edges) {
        sum += euclidean(d2.positions[u], d2.positions[v]);
    }
    double mean =
        sum / static_cast<double>(pair.slice1.edges.size() +
                                  pair.slice2.edges.size());
    if (mean <= 0.0) {
        raise(ErrorCode::DegenerateDrawing,
              "all drawn edges have zero length");
    }
    return mean;
}

double bounding_box_size(const Drawing& drawing) {
    if (drawing.positions.size() < 2) {
        raise(ErrorCode::InvalidArgument,
              "bounding box needs >= 2 points");
    }
    double min_x = drawing.positions[0].x, max_x = min_x;
    double min_y = drawing.positions[0].y, max_y = min_y;
    for (const Point& p : drawing.positions) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    double size = std::max(max_x - min_x, max_y - min_y);
    if (size <= 0.0) {
        raise(ErrorCode::DegenerateDrawing, "all points coincide");
    }
    return size;
}

} // namespace dgcf
