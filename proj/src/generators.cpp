#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "rng.hpp"

namespace dgcf {

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge norm_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

uint64_t pairs_of(uint64_t s) { return s * (s - 1) / 2; }

constexpr uint32_t kGenAttempts = 20;

void validate(const ClusterGenSpec& spec) {
    if (spec.base_vertex_count < 1 || spec.base_vertex_count > 30) {
        raise(ErrorCode::InvalidArgument,
              "base_vertex_count must be in [1, 30]");
    }
    if (spec.min_cluster_size < 2 ||
        spec.max_cluster_size < spec.min_cluster_size) {
        raise(ErrorCode::InvalidArgument,
              "cluster size range must satisfy 2 <= min <= max");
    }
    if (!(spec.intra_density > 0.0) || spec.intra_density > 1.0) {
        raise(ErrorCode::InvalidArgument, "intra_density must be in (0, 1]");
    }
    if (spec.inter_edge_count == 0) {
        raise(ErrorCode::InvalidArgument,
              "inter_edge_count must be positive");
    }
    for (const ClusterEvent& event : spec.events) {
        double target = std::holds_alternative<MergeEvent>(event)
                            ? std::get<MergeEvent>(event).target_density
                            : std::get<SplitEvent>(event).target_intra_density;
        if (!(target > 0.0) || target > 1.0) {
            raise(ErrorCode::InvalidArgument,
                  "event target density must be in (0, 1]");
        }
    }
}

void validate(const DistanceGenSpec& spec) {
    if (spec.vertex_count < 20 || spec.vertex_count > 300) {
        raise(ErrorCode::InvalidArgument,
              "vertex_count must be in [20, 300]");
    }
    if (!(spec.diameter_ratio > 0.0) || spec.diameter_ratio >= 1.0) {
        raise(ErrorCode::InvalidArgument,
              "diameter_ratio must be in (0, 1)");
    }
    if (spec.min_diameter < 2) {
        raise(ErrorCode::InvalidArgument, "min_diameter must be at least 2");
    }
}

// Attaches each vertex after the first to a random earlier one.
void add_spanning_tree(const std::vector<VertexId>& verts,
                       std::set<Edge>& edges, Rng& rng) {
    for (size_t i = 1; i < verts.size(); ++i) {
        edges.insert(norm_edge(verts[i], verts[rng.next_index(i)]));
    }
}

uint64_t edges_within(const std::set<Edge>& edges,
                      const std::vector<VertexId>& members) {
    uint64_t count = 0;
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            count += edges.count(norm_edge(members[i], members[j]));
        }
    }
    return count;
}

std::vector<Edge> cross_pairs(const std::vector<VertexId>& a,
                              const std::vector<VertexId>& b) {
    std::vector<Edge> pool;
    pool.reserve(a.size() * b.size());
    for (VertexId u : a) {
        for (VertexId v : b) {
            pool.push_back(norm_edge(u, v));
        }
    }
    return pool;
}

struct ClusterBuild {
    uint32_t n = 0;
    std::set<Edge> edges;
    std::vector<std::vector<VertexId>> members; // by current cluster id
};

Clustering members_to_clustering(uint32_t n,
                                 const std::vector<std::vector<VertexId>>& m) {
    std::vector<uint32_t> labels(n, 0);
    for (uint32_t c = 0; c < m.size(); ++c) {
        for (VertexId v : m[c]) {
            labels[v] = c;
        }
    }
    return make_clustering(std::move(labels));
}

std::vector<Edge> base_edges(uint32_t b, Rng& rng) {
    std::set<Edge> edges;
    std::vector<VertexId> verts(b);
    for (uint32_t v = 0; v < b; ++v) {
        verts[v] = v;
    }
    add_spanning_tree(verts, edges, rng);
    uint64_t target = (b - 1) + b / 2;
    std::vector<Edge> pool;
    for (uint32_t i = 0; i < b; ++i) {
        for (uint32_t j = i + 1; j < b; ++j) {
            pool.push_back({i, j});
        }
    }
    rng.shuffle(pool);
    for (const Edge& e : pool) {
        if (edges.size() >= target) {
            break;
        }
        edges.insert(e);
    }
    return {edges.begin(), edges.end()};
}

// Spanning tree first, then random extra pairs up to round(density * C(s,2)).
void fill_cluster(const std::vector<VertexId>& verts, double density,
                  std::set<Edge>& edges, Rng& rng) {
    add_spanning_tree(verts, edges, rng);
    uint64_t have = verts.size() - 1;
    auto target = static_cast<uint64_t>(
        std::llround(density * static_cast<double>(pairs_of(verts.size()))));
    if (have >= target) {
        return;
    }
    std::vector<Edge> pool;
    pool.reserve(pairs_of(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = i + 1; j < verts.size(); ++j) {
            pool.push_back(norm_edge(verts[i], verts[j]));
        }
    }
    rng.shuffle(pool);
    for (const Edge& e : pool) {
        if (have >= target) {
            break;
        }
        if (edges.insert(e).second) {
            ++have;
        }
    }
}

void apply_merge(ClusterBuild& build, const MergeEvent& event, Rng& rng) {
    if (event.cluster_a == event.cluster_b ||
        event.cluster_a >= build.members.size() ||
        event.cluster_b >= build.members.size()) {
        raise(ErrorCode::InvalidArgument,
              "merge event names an invalid cluster pair");
    }
    uint32_t lo = std::min(event.cluster_a, event.cluster_b);
    uint32_t hi = std::max(event.cluster_a, event.cluster_b);
    std::vector<VertexId> merged = build.members[lo];
    merged.insert(merged.end(), build.members[hi].begin(),
                  build.members[hi].end());

    double total = static_cast<double>(pairs_of(merged.size()));
    double have = static_cast<double>(edges_within(build.edges, merged));
    std::vector<Edge> pool =
        cross_pairs(build.members[lo], build.members[hi]);
    rng.shuffle(pool);
    size_t next = 0;
    while (have / total < event.target_density) {
        while (next < pool.size() && build.edges.count(pool[next]) != 0) {
            ++next;
        }
        if (next == pool.size()) {
            raise(ErrorCode::InfeasibleSpec,
                  "merge density target unreachable: all cross pairs used");
        }
        build.edges.insert(pool[next++]);
        have += 1.0;
    }
    build.members[lo] = std::move(merged);
    build.members.erase(build.members.begin() + hi);
}

void apply_split(ClusterBuild& build, const SplitEvent& event, Rng& rng) {
    if (event.cluster >= build.members.size()) {
        raise(ErrorCode::InvalidArgument,
              "split event names an invalid cluster");
    }
    std::vector<VertexId> all = build.members[event.cluster];
    if (all.size() < 2) {
        raise(ErrorCode::InfeasibleSpec,
              "cannot split a single-vertex cluster");
    }
    rng.shuffle(all);
    size_t half = (all.size() + 1) / 2;
    std::vector<VertexId> a(all.begin(), all.begin() + half);
    std::vector<VertexId> b(all.begin() + half, all.end());

    std::vector<Edge> cut;
    for (const Edge& e : cross_pairs(a, b)) {
        if (build.edges.count(e) != 0) {
            cut.push_back(e);
        }
    }
    rng.shuffle(cut);
    double total = static_cast<double>(pairs_of(all.size()));
    double have = static_cast<double>(edges_within(build.edges, all));
    size_t next = 0;
    while (have / total > event.target_intra_density) {
        if (next == cut.size()) {
            raise(ErrorCode::InfeasibleSpec,
                  "split density target unreachable: no cross edges left");
        }
        build.edges.erase(cut[next++]);
        have -= 1.0;
    }
    build.members[event.cluster] = std::move(a);
    build.members.push_back(std::move(b));
}

DynamicPair try_cluster_pair(const ClusterGenSpec& spec, uint64_t seed) {
    Rng rng(seed);
    ClusterBuild build;
    std::vector<Edge> base = base_edges(spec.base_vertex_count, rng);

    build.members.resize(spec.base_vertex_count);
    for (auto& cluster : build.members) {
        uint32_t size =
            spec.min_cluster_size +
            static_cast<uint32_t>(rng.next_index(
                spec.max_cluster_size - spec.min_cluster_size + 1));
        cluster.resize(size);
        for (VertexId& v : cluster) {
            v = build.n++;
        }
    }
    for (const auto& cluster : build.members) {
        fill_cluster(cluster, spec.intra_density, build.edges, rng);
    }
    for (const Edge& be : base) {
        std::vector<Edge> pool =
            cross_pairs(build.members[be.first], build.members[be.second]);
        if (pool.size() < spec.inter_edge_count) {
            raise(ErrorCode::InfeasibleSpec,
                  "inter_edge_count exceeds available cross pairs");
        }
        rng.shuffle(pool);
        for (uint32_t k = 0; k < spec.inter_edge_count; ++k) {
            build.edges.insert(pool[k]);
        }
    }

    Clustering clustering1 = members_to_clustering(build.n, build.members);
    EdgeList edges1(build.edges.begin(), build.edges.end());

    for (const ClusterEvent& event : spec.events) {
        if (std::holds_alternative<MergeEvent>(event)) {
            apply_merge(build, std::get<MergeEvent>(event), rng);
        } else {
            apply_split(build, std::get<SplitEvent>(event), rng);
        }
    }

    Clustering clustering2 = members_to_clustering(build.n, build.members);
    EdgeList edges2(build.edges.begin(), build.edges.end());

    TimeSlice slice1 = make_slice(build.n, std::move(edges1));
    TimeSlice slice2 = make_slice(build.n, std::move(edges2));
    if (!is_connected(slice1) || !is_connected(slice2)) {
        raise(ErrorCode::InfeasibleSpec, "generated slice is disconnected");
    }
    return make_pair(std::move(slice1), std::move(slice2),
                     std::move(clustering1), std::move(clustering2));
}

} // namespace

DynamicPair gen_cluster_pair(const ClusterGenSpec& spec) {
    validate(spec);
    std::string last;
    for (uint32_t attempt = 0; attempt < kGenAttempts; ++attempt) {
        try {
            return try_cluster_pair(spec, derive_seed(spec.seed, attempt));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InfeasibleSpec) {
                throw;
            }
            last = e.what();
        }
    }
    raise(ErrorCode::InfeasibleSpec,
          "cluster pair generation failed after " +
              std::to_string(kGenAttempts) + " attempts: " + last);
}

namespace {

EdgeList backbone_edges(const DistanceGenSpec& spec, Rng& rng) {
    EdgeList edges;
    uint32_t n = spec.vertex_count;
    std::vector<VertexId> order(n);
    for (uint32_t v = 0; v < n; ++v) {
        order[v] = v;
    }
    if (spec.backbone == Backbone::Path) {
        rng.shuffle(order);
        for (uint32_t i = 0; i + 1 < n; ++i) {
            edges.push_back(norm_edge(order[i], order[i + 1]));
        }
    } else {
        // attach each vertex to one of the previous 3; keeps the tree long
        for (uint32_t v = 1; v < n; ++v) {
            uint32_t span = std::min<uint32_t>(v, 3);
            auto back = static_cast<uint32_t>(rng.next_index(span)) + 1;
            edges.push_back(norm_edge(v, v - back));
        }
    }
    return edges;
}

// Farthest pair under the hop matrix, lexicographically first on ties.
Edge farthest_pair(const DistanceMatrix& hops) {
    double best = -1.0;
    Edge arg{0, 0};
    for (uint32_t i = 0; i < hops.n; ++i) {
        for (uint32_t j = i + 1; j < hops.n; ++j) {
            if (hops.at(i, j) > best) {
                best = hops.at(i, j);
                arg = {i, j};
            }
        }
    }
    return arg;
}

DynamicPair try_distance_pair(const DistanceGenSpec& spec, uint64_t seed) {
    Rng rng(seed);
    EdgeList edges1 = backbone_edges(spec, rng);
    TimeSlice slice1 = make_slice(spec.vertex_count, edges1);
    uint32_t diam1 = diameter(slice1);
    if (diam1 < spec.min_diameter) {
        raise(ErrorCode::InfeasibleSpec,
              "backbone diameter " + std::to_string(diam1) +
                  " is below the floor " +
                  std::to_string(spec.min_diameter));
    }

    EdgeList edges2 = edges1;
    TimeSlice slice2 = slice1;
    for (uint32_t s = 0; s < spec.shortcut_count; ++s) {
        DistanceMatrix hops = all_pairs_graph_distance(slice2);
        Edge far = farthest_pair(hops);
        if (hops.at(far.first, far.second) < 2.0) {
            break; // graph is complete enough; no chord can shorten it
        }
        edges2.push_back(far);
        slice2 = make_slice(spec.vertex_count, edges2);
    }

    if (spec.shortcut_count > 0) {
        uint32_t diam2 = diameter(slice2);
        if (static_cast<double>(diam2) >
            spec.diameter_ratio * static_cast<double>(diam1)) {
            raise(ErrorCode::InfeasibleSpec,
                  "diameter only fell from " + std::to_string(diam1) +
                      " to " + std::to_string(diam2) +
                      "; ratio target " + std::to_string(spec.diameter_ratio));
        }
    }
    return make_pair(std::move(slice1), std::move(slice2));
}

} // namespace

DynamicPair gen_distance_pair(const DistanceGenSpec& spec) {
    validate(spec);
    std::string last;
    for (uint32_t attempt = 0; attempt < kGenAttempts; ++attempt) {
        try {
            return try_distance_pair(spec, derive_seed(spec.seed, attempt));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InfeasibleSpec) {
                throw;
            }
            last = e.what();
        }
    }
    raise(ErrorCode::InfeasibleSpec,
          "distance pair generation failed after " +
              std::to_string(kGenAttempts) + " attempts: " + last);
}

} // namespace dgcf
