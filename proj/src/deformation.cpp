#include "deformation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "rng.hpp"

namespace dgcf {

Drawing deform_cluster_step(const Drawing& drawing, uint64_t seed,
                            double fraction) {
    if (!(fraction >= 0.0) || !std::isfinite(fraction)) {
        raise(ErrorCode::InvalidArgument,
              "displacement fraction must be finite and non-negative");
    }
    double delta = bounding_box_size(drawing) * fraction;
    Rng rng(seed);
    constexpr double kTau = 6.283185307179586;
    std::vector<Point> moved = drawing.positions;
    for (Point& p : moved) {
        double angle = rng.uniform(0.0, kTau);
        double magnitude = rng.uniform(0.0, delta);
        p.x += magnitude * std::cos(angle);
        p.y += magnitude * std::sin(angle);
    }
    return make_drawing(std::move(moved));
}

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge norm_edge(Edge e) {
    return e.first < e.second ? e : Edge{e.second, e.first};
}

// Normalized, sorted, and checked against the slice's edge set.
EdgeList checked_subset(const EdgeList& subset, const std::set<Edge>& edges,
                        const char* label) {
    EdgeList out;
    out.reserve(subset.size());
    for (const Edge& e : subset) {
        Edge n = norm_edge(e);
        if (edges.count(n) == 0) {
            raise(ErrorCode::InvalidEdgeSet,
                  std::string(label) + " set contains (" +
                      std::to_string(e.first) + ", " +
                      std::to_string(e.second) +
                      ") which is not a slice edge");
        }
        out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        raise(ErrorCode::InvalidEdgeSet,
              std::string(label) + " set contains duplicate edges");
    }
    return out;
}

// Keeps round(fraction * size) edges, chosen uniformly, back in sorted order.
EdgeList pick_subset(EdgeList edges, double fraction, Rng& rng) {
    if (fraction >= 1.0) {
        return edges;
    }
    auto keep = static_cast<size_t>(
        std::llround(fraction * static_cast<double>(edges.size())));
    rng.shuffle(edges);
    edges.resize(keep);
    std::sort(edges.begin(), edges.end());
    return edges;
}

} // namespace

Drawing deform_distance_step(const Drawing& drawing, const TimeSlice& slice,
                             const EdgeList& stretch_set,
                             const EdgeList& shrink_set, uint64_t seed,
                             double factor, double subset_fraction) {
    if (drawing.positions.size() != slice.vertex_count) {
        raise(ErrorCode::SizeMismatch,
              "drawing size does not match slice vertex count");
    }
    if (!(factor > 1.0)) {
        raise(ErrorCode::InvalidArgument, "factor must exceed 1");
    }
    if (!(subset_fraction > 0.0) || subset_fraction > 1.0) {
        raise(ErrorCode::InvalidArgument,
              "subset_fraction must be in (0, 1]");
    }

    std::set<Edge> edge_set(slice.edges.begin(), slice.edges.end());
    EdgeList stretch = checked_subset(stretch_set, edge_set, "stretch");
    EdgeList shrink = checked_subset(shrink_set, edge_set, "shrink");
    {
        EdgeList overlap;
        std::set_intersection(stretch.begin(), stretch.end(), shrink.begin(),
                              shrink.end(), std::back_inserter(overlap));
        if (!overlap.empty()) {
            raise(ErrorCode::InvalidEdgeSet,
                  "stretch and shrink sets overlap on " +
                      std::to_string(overlap.size()) + " edges");
        }
    }

    Rng rng(seed);
    stretch = pick_subset(std::move(stretch), subset_fraction, rng);
    shrink = pick_subset(std::move(shrink), subset_fraction, rng);

    std::vector<uint32_t> degree(slice.vertex_count, 0);
    for (const auto& [u, v] : slice.edges) {
        ++degree[u];
        ++degree[v];
    }

    std::vector<Point> pos = drawing.positions;
    auto apply = [&](const EdgeList& edges, double multiplier) {
        for (const auto& [u, v] : edges) {
            VertexId moved = u;
            VertexId fixed = v;
            if (degree[v] < degree[u] ||
                (degree[v] == degree[u] && v < u)) {
                moved = v;
                fixed = u;
            }
            double dx = pos[moved].x - pos[fixed].x;
            double dy = pos[moved].y - pos[fixed].y;
            if (dx == 0.0 && dy == 0.0) {
                continue; // zero length has no direction to scale along
            }
            pos[moved].x = pos[fixed].x + dx * multiplier;
            pos[moved].y = pos[fixed].y + dy * multiplier;
        }
    };
    apply(stretch, factor);
    apply(shrink, 1.0 / factor);
    return make_drawing(std::move(pos));
}

} // namespace dgcf
