#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "dataset_io.hpp"
#include "experiments.hpp"
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

DynamicPair small_cluster_pair(uint64_t seed) {
    ClusterGenSpec spec;
    spec.base_vertex_count = 4;
    spec.min_cluster_size = 8;
    spec.max_cluster_size = 12;
    spec.events = {MergeEvent{0, 1, 0.3}};
    spec.seed = seed;
    return gen_cluster_pair(spec);
}

DynamicPair small_distance_pair(uint64_t seed) {
    DistanceGenSpec spec;
    spec.vertex_count = 24;
    spec.backbone = Backbone::Path;
    spec.shortcut_count = 5;
    spec.seed = seed;
    return gen_distance_pair(spec);
}

bool traces_identical(const ExperimentTrace& a, const ExperimentTrace& b) {
    if (a.datasets.size() != b.datasets.size()) {
        return false;
    }
    for (size_t i = 0; i < a.datasets.size(); ++i) {
        if (a.datasets[i].dataset_id != b.datasets[i].dataset_id ||
            a.datasets[i].per_step.size() != b.datasets[i].per_step.size()) {
            return false;
        }
        for (size_t s = 0; s < a.datasets[i].per_step.size(); ++s) {
            const auto& ra = a.datasets[i].per_step[s];
            const auto& rb = b.datasets[i].per_step[s];
            if (ra.step != rb.step || ra.metrics != rb.metrics) {
                return false;
            }
        }
    }
    return true;
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name) {
        path = std::filesystem::temp_directory_path() / name;
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("spearman handles perfect, inverse, tied, and flat inputs") {
    CHECK(spearman({1.0, 2.0, 3.0}, {10.0, 20.0, 30.0}) ==
          doctest::Approx(1.0));
    CHECK(spearman({1.0, 2.0, 3.0}, {3.0, 2.0, 1.0}) ==
          doctest::Approx(-1.0));
    CHECK(spearman({1.0, 1.0, 2.0}, {1.0, 2.0, 3.0}) ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
    CHECK(spearman({5.0, 5.0, 5.0}, {1.0, 2.0, 3.0}) == 0.0);
}

TEST_CASE("aggregate means equal a direct recomputation") {
    ExperimentTrace trace;
    trace.datasets.resize(2);
    trace.datasets[0].dataset_id = "a";
    trace.datasets[1].dataset_id = "b";
    for (uint32_t s = 0; s < 3; ++s) {
        StepRecord ra{s, {{"m", 1.0 + s}, {"k", 10.0 * s}}};
        StepRecord rb{s, {{"m", 3.0 + s}, {"k", 20.0 * s}}};
        trace.datasets[0].per_step.push_back(ra);
        trace.datasets[1].per_step.push_back(rb);
    }
    auto means = aggregate_means(trace);
    REQUIRE(means.size() == 3);
    for (uint32_t s = 0; s < 3; ++s) {
        CHECK(means[s].metrics.at("m") == doctest::Approx(2.0 + s));
        CHECK(means[s].metrics.at("k") == doctest::Approx(15.0 * s));
    }

    trace.datasets[1].per_step.pop_back();
    CHECK(error_code_of([&] { aggregate_means(trace); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("aggregate means reject mismatched metric sets") {
    ExperimentTrace trace;
    trace.datasets.resize(2);
    trace.datasets[0].per_step.push_back({0, {{"m", 1.0}}});
    trace.datasets[1].per_step.push_back({0, {{"x", 1.0}}});
    CHECK(error_code_of([&] { aggregate_means(trace); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("ccq validation reports the full metric set and a clean step 0") {
    ExperimentConfig config;
    config.steps = 3;
    config.seed = 61;
    config.datasets = {small_cluster_pair(1), small_cluster_pair(2)};
    config.dataset_ids = {"first", "second"};
    ExperimentTrace trace = run_ccq_validation(config);

    REQUIRE(trace.datasets.size() == 2);
    CHECK(trace.datasets[0].dataset_id == "first");
    CHECK(trace.datasets[1].dataset_id == "second");
    const std::vector<std::string> expected{"ccq_ari",  "ccq_fmi",
                                            "cq_ari_1", "cq_ari_2",
                                            "cq_fmi_1", "cq_fmi_2"};
    for (const DatasetTrace& ds : trace.datasets) {
        REQUIRE(ds.per_step.size() == 4); // steps 0..3
        for (size_t s = 0; s < ds.per_step.size(); ++s) {
            CHECK(ds.per_step[s].step == s);
            std::vector<std::string> names;
            for (const auto& [name, value] : ds.per_step[s].metrics) {
                names.push_back(name);
                CHECK(std::isfinite(value));
            }
            CHECK(names == expected);
        }
        CHECK(ds.per_step[0].metrics.at("ccq_ari") == 1.0);
        CHECK(ds.per_step[0].metrics.at("ccq_fmi") == 1.0);
        CHECK(ds.per_step[0].metrics.at("cq_ari_1") == 1.0);
        CHECK(ds.per_step[0].metrics.at("cq_ari_2") == 1.0);
    }
}

TEST_CASE("ccq validation is reproducible and thread-count independent") {
    ExperimentConfig config;
    config.steps = 2;
    config.seed = 62;
    config.datasets = {small_cluster_pair(3), small_cluster_pair(4),
                       small_cluster_pair(5)};
    config.dataset_ids = {"a", "b", "c"};
    config.threads = 1;
    ExperimentTrace serial = run_ccq_validation(config);
    config.threads = 3;
    ExperimentTrace parallel = run_ccq_validation(config);
    CHECK(traces_identical(serial, parallel));
}

TEST_CASE("dcq validation reports distance metrics per step") {
    ExperimentConfig config;
    config.steps = 3;
    config.seed = 63;
    config.datasets = {small_distance_pair(6)};
    config.dataset_ids = {"d"};
    ExperimentTrace trace = run_dcq_validation(config);

    REQUIRE(trace.datasets.size() == 1);
    const DatasetTrace& ds = trace.datasets[0];
    REQUIRE(ds.per_step.size() == 4);
    const std::vector<std::string> expected{"dcq1", "dcq2", "stress_1",
                                            "stress_2"};
    std::vector<std::string> names;
    for (const auto& [name, value] : ds.per_step[0].metrics) {
        names.push_back(name);
        CHECK(std::isfinite(value));
    }
    CHECK(names == expected);

    // deforming the second drawing leaves slice-1 stress untouched
    const double stress1 = ds.per_step[0].metrics.at("stress_1");
    for (const StepRecord& record : ds.per_step) {
        CHECK(record.metrics.at("stress_1") == stress1);
    }
    CHECK(ds.per_step[3].metrics.at("stress_2") >
          ds.per_step[0].metrics.at("stress_2"));
}

TEST_CASE("dcq validation is reproducible and thread-count independent") {
    ExperimentConfig config;
    config.steps = 2;
    config.seed = 64;
    config.datasets = {small_distance_pair(7), small_distance_pair(8)};
    config.dataset_ids = {"a", "b"};
    config.threads = 1;
    ExperimentTrace serial = run_dcq_validation(config);
    config.threads = 4;
    ExperimentTrace parallel = run_dcq_validation(config);
    CHECK(traces_identical(serial, parallel));
}

TEST_CASE("generated datasets can be emitted while running") {
    TempDir dir("dgcf-test-emit");
    ExperimentConfig config;
    config.dataset_count = 2;
    config.steps = 1;
    config.seed = 65;
    config.emit_dataset_dir = dir.path.string();
    ExperimentTrace trace = run_dcq_validation(config);
    REQUIRE(trace.datasets.size() == 2);
    for (const DatasetTrace& ds : trace.datasets) {
        const auto file = dir.path / (ds.dataset_id + ".json");
        CHECK(std::filesystem::exists(file));
        DynamicPair pair = load_dataset(file.string());
        CHECK(pair.slice1.vertex_count >= 20);
    }
}

TEST_CASE("layout comparison scores imported coordinates") {
    // identical drawings for an unchanged pair are perfectly change
    // faithful, so every ccq is exactly 1
    ClusterGenSpec spec;
    spec.base_vertex_count = 4;
    spec.min_cluster_size = 8;
    spec.max_cluster_size = 10;
    spec.seed = 66;
    DynamicPair pair = gen_cluster_pair(spec);

    TempDir dir("dgcf-test-import");
    auto [d1, d2] = cluster_faithful_layout(pair, 9);
    (void)d2;
    const std::string coords = (dir.path / "same.coords").string();
    save_coordinates(d1, coords);

    ExperimentConfig config;
    config.seed = 67;
    config.datasets = {pair};
    config.dataset_ids = {"flat"};
    ComparisonLayout imported;
    imported.name = "frozen";
    imported.import_pattern = coords; // no {slice}: both slices load it
    ExperimentTrace trace = run_layout_comparison(
        config, DatasetKind::Cluster, {imported});

    REQUIRE(trace.datasets.size() == 1);
    CHECK(trace.datasets[0].dataset_id == "frozen/flat");
    const MetricReport& metrics = trace.datasets[0].per_step[0].metrics;
    CHECK(metrics.at("ccq_ari") == 1.0);
    CHECK(metrics.at("ccq_fmi") == 1.0);

    ComparisonLayout missing;
    missing.name = "gone";
    missing.import_pattern = (dir.path / "na-{dataset}-{slice}.xy").string();
    CHECK(error_code_of([&] {
              run_layout_comparison(config, DatasetKind::Cluster, {missing});
          }) == ErrorCode::IoError);
}

TEST_CASE("cluster faithful layouts keep comparison ccq near 1") {
    ExperimentConfig config;
    config.seed = 68;
    config.datasets = {small_cluster_pair(10), small_cluster_pair(11),
                       small_cluster_pair(12)};
    config.dataset_ids = {"a", "b", "c"};
    ComparisonLayout faithful;
    faithful.name = "clusterfaithful";
    faithful.builtin = LayoutChoice::ClusterFaithful;
    ExperimentTrace trace = run_layout_comparison(
        config, DatasetKind::Cluster, {faithful});
    double total = 0.0;
    for (const DatasetTrace& ds : trace.datasets) {
        total += ds.per_step[0].metrics.at("ccq_ari");
    }
    CHECK(total / 3.0 >= 0.9);
}

TEST_CASE("default spec ladders stay inside the documented ranges") {
    auto cluster_specs = default_cluster_specs(10, 99);
    REQUIRE(cluster_specs.size() == 10);
    for (const ClusterGenSpec& spec : cluster_specs) {
        CHECK(spec.base_vertex_count >= 8);
        CHECK(spec.base_vertex_count <= 12);
        const uint64_t lo = static_cast<uint64_t>(spec.base_vertex_count) *
                            spec.min_cluster_size;
        const uint64_t hi = static_cast<uint64_t>(spec.base_vertex_count) *
                            spec.max_cluster_size;
        CHECK(lo >= 200);
        CHECK(hi <= 1000);
        CHECK_FALSE(spec.events.empty());
    }

    auto distance_specs = default_distance_specs(10, 99);
    REQUIRE(distance_specs.size() == 10);
    for (const DistanceGenSpec& spec : distance_specs) {
        CHECK(spec.vertex_count >= 20);
        CHECK(spec.vertex_count <= 300);
    }
    CHECK(distance_specs.front().vertex_count == 20);
    CHECK(distance_specs.back().vertex_count == 300);
}

TEST_CASE("the edge split divides the second slice's edges evenly") {
    DynamicPair pair = small_distance_pair(13);
    auto [stretch, shrink] = default_edge_split(pair.slice2, 70);
    CHECK(stretch.size() == pair.slice2.edges.size() / 2);
    CHECK(stretch.size() + shrink.size() == pair.slice2.edges.size());

    EdgeList all = stretch;
    all.insert(all.end(), shrink.begin(), shrink.end());
    std::sort(all.begin(), all.end());
    EdgeList expected = pair.slice2.edges;
    std::sort(expected.begin(), expected.end());
    CHECK(all == expected);

    auto [stretch2, shrink2] = default_edge_split(pair.slice2, 70);
    CHECK(stretch == stretch2);
    CHECK(shrink == shrink2);
}

TEST_CASE("experiment configs are validated") {
    ExperimentConfig config;
    config.dataset_count = 0;
    CHECK(error_code_of([&] { run_ccq_validation(config); }) ==
          ErrorCode::InvalidArgument);

    ExperimentConfig mismatch;
    mismatch.datasets = {small_distance_pair(14)};
    mismatch.dataset_ids = {"a", "b"};
    CHECK(error_code_of([&] { run_dcq_validation(mismatch); }) ==
          ErrorCode::SizeMismatch);

    ExperimentConfig fine;
    fine.datasets = {small_distance_pair(15)};
    CHECK(error_code_of([&] {
              run_layout_comparison(fine, DatasetKind::Distance, {});
          }) == ErrorCode::InvalidArgument);
}
