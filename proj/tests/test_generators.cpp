#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using namespace dgcf;

namespace {

template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected the call to raise an error");
    return ErrorCode::InvalidArgument;
}

bool subset_of(const EdgeList& small, const EdgeList& big) {
    std::set<std::pair<VertexId, VertexId>> pool(big.begin(), big.end());
    return std::all_of(small.begin(), small.end(),
                       [&](const auto& e) { return pool.count(e) != 0; });
}

std::vector<std::vector<VertexId>> members_of(const Clustering& c) {
    std::vector<std::vector<VertexId>> members(c.cluster_count);
    for (uint32_t v = 0; v < c.labels.size(); ++v) {
        members[c.labels[v]].push_back(v);
    }
    return members;
}

double density_within(const TimeSlice& slice,
                      const std::vector<VertexId>& members) {
    std::set<std::pair<VertexId, VertexId>> pool(slice.edges.begin(),
                                                 slice.edges.end());
    uint64_t count = 0;
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            auto u = members[i];
            auto v = members[j];
            if (u > v) {
                std::swap(u, v);
            }
            count += pool.count({u, v});
        }
    }
    const auto pairs = static_cast<double>(members.size() *
                                           (members.size() - 1) / 2);
    return static_cast<double>(count) / pairs;
}

ClusterGenSpec medium_spec(uint64_t seed) {
    ClusterGenSpec spec;
    spec.base_vertex_count = 10;
    spec.min_cluster_size = 20;
    spec.max_cluster_size = 40;
    spec.intra_density = 0.3;
    spec.inter_edge_count = 3;
    spec.seed = seed;
    return spec;
}

} // namespace

TEST_CASE("cluster pair with no events repeats the first slice") {
    ClusterGenSpec spec;
    spec.base_vertex_count = 4;
    spec.min_cluster_size = 6;
    spec.max_cluster_size = 10;
    spec.seed = 3;
    DynamicPair pair = gen_cluster_pair(spec);
    CHECK(pair.slice1.edges == pair.slice2.edges);
    REQUIRE(pair.clustering1.has_value());
    REQUIRE(pair.clustering2.has_value());
    CHECK(pair.clustering1->labels == pair.clustering2->labels);
    CHECK(pair.clustering1->cluster_count == 4);
    CHECK(is_connected(pair.slice1));
}

TEST_CASE("merge joins two clusters and only adds edges") {
    ClusterGenSpec spec = medium_spec(5);
    spec.events = {MergeEvent{0, 2, 0.3}};
    DynamicPair pair = gen_cluster_pair(spec);
    CHECK(pair.clustering2->cluster_count ==
          pair.clustering1->cluster_count - 1);
    CHECK(subset_of(pair.slice1.edges, pair.slice2.edges));

    // the new cluster 0 holds exactly the old clusters 0 and 2
    std::set<VertexId> expected;
    for (uint32_t v = 0; v < pair.clustering1->labels.size(); ++v) {
        if (pair.clustering1->labels[v] == 0 ||
            pair.clustering1->labels[v] == 2) {
            expected.insert(v);
        }
    }
    std::set<VertexId> actual;
    for (uint32_t v = 0; v < pair.clustering2->labels.size(); ++v) {
        if (pair.clustering2->labels[v] == 0) {
            actual.insert(v);
        }
    }
    CHECK(actual == expected);

    // density of the merged cluster reached the target without overshooting
    // by more than one edge
    auto members = members_of(*pair.clustering2);
    const double density = density_within(pair.slice2, members[0]);
    const auto pairs = static_cast<double>(members[0].size() *
                                           (members[0].size() - 1) / 2);
    CHECK(density >= 0.3);
    CHECK(density <= 0.3 + 1.0 / pairs + 1e-12);
}

TEST_CASE("split adds one cluster and only removes edges") {
    ClusterGenSpec spec = medium_spec(6);
    spec.events = {SplitEvent{1, 0.165}};
    DynamicPair pair = gen_cluster_pair(spec);
    CHECK(pair.clustering2->cluster_count ==
          pair.clustering1->cluster_count + 1);
    CHECK(subset_of(pair.slice2.edges, pair.slice1.edges));

    // both halves together cover the old cluster 1; the density over that
    // original member set just reached the target from above
    std::vector<VertexId> original;
    for (uint32_t v = 0; v < pair.clustering1->labels.size(); ++v) {
        if (pair.clustering1->labels[v] == 1) {
            original.push_back(v);
        }
    }
    const uint32_t new_label = pair.clustering2->cluster_count - 1;
    std::vector<VertexId> rejoined;
    for (uint32_t v = 0; v < pair.clustering2->labels.size(); ++v) {
        if (pair.clustering2->labels[v] == 1 ||
            pair.clustering2->labels[v] == new_label) {
            rejoined.push_back(v);
        }
    }
    std::sort(rejoined.begin(), rejoined.end());
    CHECK(rejoined == original);

    const double density = density_within(pair.slice2, original);
    const auto pairs = static_cast<double>(original.size() *
                                           (original.size() - 1) / 2);
    CHECK(density <= 0.165);
    CHECK(density >= 0.165 - 1.0 / pairs - 1e-12);
}

TEST_CASE("cluster generation is deterministic per seed") {
    ClusterGenSpec spec = medium_spec(7);
    spec.events = {MergeEvent{0, 1, 0.3}, SplitEvent{2, 0.165}};
    DynamicPair a = gen_cluster_pair(spec);
    DynamicPair b = gen_cluster_pair(spec);
    CHECK(a.slice1.edges == b.slice1.edges);
    CHECK(a.slice2.edges == b.slice2.edges);
    CHECK(a.clustering1->labels == b.clustering1->labels);
    CHECK(a.clustering2->labels == b.clustering2->labels);
}

TEST_CASE("ten medium cluster datasets meet size, connectivity, and density") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        ClusterGenSpec spec = medium_spec(100 + seed);
        switch (seed % 3) {
        case 0:
            spec.events = {MergeEvent{0, 1, spec.intra_density}};
            break;
        case 1:
            spec.events = {SplitEvent{0, spec.intra_density * 0.55}};
            break;
        default:
            break;
        }
        DynamicPair pair = gen_cluster_pair(spec);
        const uint32_t n = pair.slice1.vertex_count;
        CHECK(n >= 200);
        CHECK(n <= 1000);
        CHECK(is_connected(pair.slice1));
        CHECK(is_connected(pair.slice2));

        // every first-slice cluster sits within 10% of the density knob
        for (const auto& members : members_of(*pair.clustering1)) {
            const double density = density_within(pair.slice1, members);
            CHECK(std::abs(density - spec.intra_density) <=
                  0.1 * spec.intra_density);
        }

        if (seed % 3 == 0) {
            // merged cluster 0 within 10% of the merge target
            auto members = members_of(*pair.clustering2);
            const double density = density_within(pair.slice2, members[0]);
            CHECK(std::abs(density - spec.intra_density) <=
                  0.1 * spec.intra_density);
        } else if (seed % 3 == 1) {
            // split halves rejoined within 10% of the split target
            std::vector<VertexId> original;
            for (uint32_t v = 0; v < n; ++v) {
                if (pair.clustering1->labels[v] == 0) {
                    original.push_back(v);
                }
            }
            const double target = spec.intra_density * 0.55;
            const double density = density_within(pair.slice2, original);
            CHECK(std::abs(density - target) <= 0.1 * target);
        }
    }
}

TEST_CASE("cluster spec validation rejects out-of-range knobs") {
    ClusterGenSpec spec = medium_spec(0);
    spec.base_vertex_count = 31;
    CHECK(error_code_of([&] { gen_cluster_pair(spec); }) ==
          ErrorCode::InvalidArgument);
    spec = medium_spec(0);
    spec.min_cluster_size = 1;
    CHECK(error_code_of([&] { gen_cluster_pair(spec); }) ==
          ErrorCode::InvalidArgument);
    spec = medium_spec(0);
    spec.intra_density = 0.0;
    CHECK(error_code_of([&] { gen_cluster_pair(spec); }) ==
          ErrorCode::InvalidArgument);
    spec = medium_spec(0);
    spec.inter_edge_count = 0;
    CHECK(error_code_of([&] { gen_cluster_pair(spec); }) ==
          ErrorCode::InvalidArgument);
    spec = medium_spec(0);
    spec.events = {MergeEvent{0, 0, 0.3}};
    CHECK(error_code_of([&] { gen_cluster_pair(spec); }) ==
          ErrorCode::InvalidArgument);
    spec = medium_spec(0);
    spec.events = {SplitEvent{0, 1.5}};
    CHECK(error_code_of([&] { gen_cluster_pair(spec); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("distance pair with no shortcuts repeats the first slice") {
    DistanceGenSpec spec;
    spec.vertex_count = 24;
    spec.shortcut_count = 0;
    spec.seed = 8;
    DynamicPair pair = gen_distance_pair(spec);
    CHECK(pair.slice1.edges == pair.slice2.edges);
    CHECK_FALSE(pair.clustering1.has_value());
    CHECK_FALSE(pair.clustering2.has_value());
}

TEST_CASE("shortcuts only add edges and halve the diameter") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        DistanceGenSpec spec;
        spec.vertex_count = static_cast<uint32_t>(20 + 28 * seed); // 20..272
        spec.backbone = seed % 2 == 0 ? Backbone::Tree : Backbone::Path;
        spec.shortcut_count = 3 + spec.vertex_count / 60;
        spec.seed = 200 + seed;
        DynamicPair pair = gen_distance_pair(spec);

        CHECK(subset_of(pair.slice1.edges, pair.slice2.edges));
        CHECK(pair.slice1.edges.size() == spec.vertex_count - 1);
        CHECK(pair.slice2.edges.size() ==
              spec.vertex_count - 1 + spec.shortcut_count);

        // diameter ratio verified against an independent shortest-path scan
        auto longest = [](const TimeSlice& slice) {
            auto d = oracle::floyd_warshall(slice);
            double best = 0.0;
            for (const auto& row : d) {
                for (double v : row) {
                    best = std::max(best, v);
                }
            }
            return best;
        };
        const double diam1 = longest(pair.slice1);
        const double diam2 = longest(pair.slice2);
        CHECK(diam2 <= 0.5 * diam1);
        CHECK(diam1 >= 8.0);
    }
}

TEST_CASE("distance generation is deterministic per seed") {
    DistanceGenSpec spec;
    spec.vertex_count = 40;
    spec.seed = 9;
    DynamicPair a = gen_distance_pair(spec);
    DynamicPair b = gen_distance_pair(spec);
    CHECK(a.slice1.edges == b.slice1.edges);
    CHECK(a.slice2.edges == b.slice2.edges);
}

TEST_CASE("distance spec validation rejects out-of-range knobs") {
    DistanceGenSpec spec;
    spec.vertex_count = 19;
    CHECK(error_code_of([&] { gen_distance_pair(spec); }) ==
          ErrorCode::InvalidArgument);
    spec.vertex_count = 301;
    CHECK(error_code_of([&] { gen_distance_pair(spec); }) ==
          ErrorCode::InvalidArgument);
    spec.vertex_count = 40;
    spec.diameter_ratio = 1.0;
    CHECK(error_code_of([&] { gen_distance_pair(spec); }) ==
          ErrorCode::InvalidArgument);
    spec.diameter_ratio = 0.5;
    spec.min_diameter = 1;
    CHECK(error_code_of([&] { gen_distance_pair(spec); }) ==
          ErrorCode::InvalidArgument);
}
