#include <doctest.h>

#include <cmath>
#include <vector>

#include "change_metrics.hpp"
#include "cluster_compare.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "layouts.hpp"
#include "oracles.hpp"
#include "rng.hpp"

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

TimeSlice path(uint32_t n) {
    EdgeList edges;
    for (uint32_t v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return make_slice(n, std::move(edges));
}

TimeSlice complete(uint32_t n) {
    EdgeList edges;
    for (uint32_t u = 0; u < n; ++u) {
        for (uint32_t v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return make_slice(n, std::move(edges));
}

} // namespace

TEST_CASE("stress majorization embeds a path almost isometrically") {
    TimeSlice p10 = path(10);
    Drawing d = layout_stress_majorization(p10, 17);
    CHECK(stress(p10, d) < 0.05);
}

TEST_CASE("stress majorization realizes a triangle exactly") {
    TimeSlice k3 = complete(3);
    Drawing d = layout_stress_majorization(k3, 2);
    CHECK(stress(k3, d) < 1e-6);
}

TEST_CASE("stress majorization never increases stress between iterations") {
    Rng rng(41);
    for (int round = 0; round < 6; ++round) {
        const auto n = static_cast<uint32_t>(10 + rng.next_index(40));
        TimeSlice slice = oracle::random_connected_slice(rng, n, n / 2);
        std::vector<double> trace;
        layout_stress_majorization(slice, 1000 + round, {}, &trace);
        REQUIRE(trace.size() >= 2);
        for (size_t i = 1; i < trace.size(); ++i) {
            CHECK(trace[i] <= trace[i - 1] + 1e-12);
        }
        CHECK(trace.back() <= trace.front());
    }
}

TEST_CASE("stress majorization is deterministic per seed") {
    Rng rng(42);
    TimeSlice slice = oracle::random_connected_slice(rng, 25, 10);
    Drawing a = layout_stress_majorization(slice, 5);
    Drawing b = layout_stress_majorization(slice, 5);
    REQUIRE(a.positions.size() == b.positions.size());
    for (size_t i = 0; i < a.positions.size(); ++i) {
        CHECK(a.positions[i].x == b.positions[i].x);
        CHECK(a.positions[i].y == b.positions[i].y);
    }
    CHECK(error_code_of([] {
              layout_stress_majorization(make_slice(4, {{0, 1}, {2, 3}}), 0);
          }) == ErrorCode::DisconnectedGraph);
}

TEST_CASE("force layout separates a single edge by the ideal length") {
    TimeSlice pair = make_slice(2, {{0, 1}});
    Drawing d = layout_fruchterman_reingold(pair, 3);
    const double len = euclidean(d.positions[0], d.positions[1]);
    CHECK(len > 0.9);
    CHECK(len < 1.1);
}

TEST_CASE("force layout draws a complete quad symmetrically") {
    // equilibrium is a square with sides ~0.85 and diagonals ~1.21, so no
    // four points can pack the six distances tighter; within 25% of the
    // ideal length is the attainable symmetry bound
    Drawing d = layout_fruchterman_reingold(complete(4), 11);
    for (uint32_t i = 0; i < 4; ++i) {
        for (uint32_t j = i + 1; j < 4; ++j) {
            const double len = euclidean(d.positions[i], d.positions[j]);
            CHECK(len >= 0.75);
            CHECK(len <= 1.25);
        }
    }
}

TEST_CASE("force layout is bit-identical per seed") {
    Rng rng(43);
    TimeSlice slice = oracle::random_connected_slice(rng, 20, 8);
    Drawing a = layout_fruchterman_reingold(slice, 77);
    Drawing b = layout_fruchterman_reingold(slice, 77);
    for (size_t i = 0; i < a.positions.size(); ++i) {
        CHECK(a.positions[i].x == b.positions[i].x);
        CHECK(a.positions[i].y == b.positions[i].y);
    }
}

TEST_CASE("cluster faithful layout recovers ground truth in both slices") {
    ClusterGenSpec spec;
    spec.base_vertex_count = 5;
    spec.min_cluster_size = 8;
    spec.max_cluster_size = 14;
    spec.events = {MergeEvent{0, 1, 0.3}};
    spec.seed = 44;
    DynamicPair pair = gen_cluster_pair(spec);
    auto [d1, d2] = cluster_faithful_layout(pair, 4);
    for (ClusterIndex index : {ClusterIndex::Ari, ClusterIndex::Fmi}) {
        CHECK(cq(*pair.clustering1, d1, index, 1) == 1.0);
        CHECK(cq(*pair.clustering2, d2, index, 2) == 1.0);
    }
}

TEST_CASE("cluster faithful layout handles a single cluster") {
    TimeSlice s = complete(6);
    Clustering lump = make_clustering(std::vector<uint32_t>(6, 0));
    DynamicPair pair = make_pair(s, s, lump, lump);
    auto [d1, d2] = cluster_faithful_layout(pair, 0);
    CHECK(cq(lump, d1, ClusterIndex::Ari, 9) == 1.0);
    CHECK(cq(lump, d2, ClusterIndex::Ari, 9) == 1.0);
}

TEST_CASE("cluster faithful layout requires ground-truth clusterings") {
    TimeSlice s = complete(4);
    DynamicPair bare = make_pair(s, s);
    CHECK(error_code_of([&] { cluster_faithful_layout(bare, 0); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("cluster faithful layout is deterministic per seed") {
    ClusterGenSpec spec;
    spec.base_vertex_count = 4;
    spec.min_cluster_size = 6;
    spec.max_cluster_size = 9;
    spec.seed = 45;
    DynamicPair pair = gen_cluster_pair(spec);
    auto [a1, a2] = cluster_faithful_layout(pair, 12);
    auto [b1, b2] = cluster_faithful_layout(pair, 12);
    for (size_t i = 0; i < a1.positions.size(); ++i) {
        CHECK(a1.positions[i].x == b1.positions[i].x);
        CHECK(a2.positions[i].y == b2.positions[i].y);
    }
}
