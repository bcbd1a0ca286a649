#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "change_metrics.hpp"
#include "cluster_compare.hpp"
#include "dataset_io.hpp"
#include "deformation.hpp"
#include "layouts.hpp"
#include "rng.hpp"

namespace dgcf {

namespace {

std::vector<double> average_ranks(const std::vector<double>& values) {
    size_t n = values.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return values[a] < values[b];
    });
    std::vector<double> ranks(n, 0.0);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        double shared = (static_cast<double>(i) + static_cast<double>(j)) /
                            2.0 +
                        1.0;
        for (size_t k = i; k <= j; ++k) {
            ranks[order[k]] = shared;
        }
        i = j + 1;
    }
    return ranks;
}

} // namespace

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        raise(ErrorCode::SizeMismatch,
              "rank correlation needs equal-length sequences");
    }
    if (a.size() < 2) {
        raise(ErrorCode::InvalidArgument,
              "rank correlation needs at least 2 observations");
    }
    std::vector<double> ra = average_ranks(a);
    std::vector<double> rb = average_ranks(b);
    double n = static_cast<double>(a.size());
    double mean = (n + 1.0) / 2.0;
    double cov = 0.0;
    double var_a = 0.0;
    double var_b = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double da = ra[i] - mean;
        double db = rb[i] - mean;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0) {
        return 0.0;
    }
    return cov / std::sqrt(var_a * var_b);
}

namespace {

constexpr double kStretchFactor = 1.15;
constexpr uint32_t kPipelineLayoutAttempts = 10;

std::string default_id(const char* prefix, uint32_t index) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%s-%02u", prefix, index);
    return buffer;
}

// Runs fn(0..count) on the requested number of workers. Indexed outputs keep
// results independent of scheduling.
void for_each_index(uint32_t count, uint32_t threads,
                    const std::function<void(uint32_t)>& fn) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, std::max(count, 1u));
    if (threads <= 1 || count <= 1) {
        for (uint32_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<uint32_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        while (true) {
            uint32_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (uint32_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (std::thread& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

struct DatasetSet {
    std::vector<DynamicPair> pairs;
    std::vector<std::string> ids;
};

void maybe_emit(const DatasetSet& set, const std::string& dir,
                bool generated) {
    if (dir.empty() || !generated) {
        return;
    }
    for (size_t i = 0; i < set.pairs.size(); ++i) {
        save_dataset(set.pairs[i], dir + "/" + set.ids[i] + ".json");
    }
}

DatasetSet resolve_datasets(const ExperimentConfig& config, DatasetKind kind,
                            const char* id_prefix) {
    DatasetSet set;
    if (!config.datasets.empty()) {
        if (!config.dataset_ids.empty() &&
            config.dataset_ids.size() != config.datasets.size()) {
            raise(ErrorCode::SizeMismatch,
                  "dataset_ids does not match datasets");
        }
        set.pairs = config.datasets;
        for (size_t i = 0; i < set.pairs.size(); ++i) {
            set.ids.push_back(config.dataset_ids.empty()
                                  ? default_id(id_prefix,
                                               static_cast<uint32_t>(i))
                                  : config.dataset_ids[i]);
        }
        return set;
    }
    if (config.dataset_count == 0) {
        raise(ErrorCode::InvalidArgument, "dataset_count must be positive");
    }
    set.pairs.resize(config.dataset_count);
    set.ids.resize(config.dataset_count);
    if (kind == DatasetKind::Cluster) {
        auto specs = default_cluster_specs(config.dataset_count, config.seed);
        for_each_index(config.dataset_count, config.threads, [&](uint32_t i) {
            set.pairs[i] = gen_cluster_pair(specs[i]);
            set.ids[i] = default_id(id_prefix, i);
        });
    } else {
        auto specs =
            default_distance_specs(config.dataset_count, config.seed);
        for_each_index(config.dataset_count, config.threads, [&](uint32_t i) {
            set.pairs[i] = gen_distance_pair(specs[i]);
            set.ids[i] = default_id(id_prefix, i);
        });
    }
    maybe_emit(set, config.emit_dataset_dir, true);
    return set;
}

// Per-dataset seed streams. Values are arbitrary but fixed; every consumer
// derives from these so the worker count never touches the numbers.
uint64_t layout_stream(uint64_t ds_seed, uint32_t attempt) {
    return derive_seed(ds_seed, 10 + attempt);
}
uint64_t deform_stream(uint64_t ds_seed, uint32_t step) {
    return derive_seed(ds_seed, 100 + step);
}
uint64_t kmeans_stream(uint64_t ds_seed, uint32_t step) {
    return derive_seed(ds_seed, 200 + step);
}
uint64_t fraction_stream(uint64_t ds_seed, uint32_t step) {
    return derive_seed(ds_seed, 300 + step);
}
uint64_t split_stream(uint64_t ds_seed) { return derive_seed(ds_seed, 50); }

bool recovers(const Clustering& truth, const Drawing& drawing,
              uint64_t seed) {
    return cluster_index(truth,
                         geometric_clustering(drawing, truth.cluster_count,
                                              seed),
                         ClusterIndex::Ari) == 1.0;
}

DatasetTrace ccq_dataset_trace(const DynamicPair& pair,
                               const std::string& id, uint64_t ds_seed,
                               uint32_t steps) {
    if (!pair.clustering1 || !pair.clustering2) {
        raise(ErrorCode::InvalidArgument,
              "dataset " + id + " carries no ground-truth clusterings");
    }
    const Clustering& truth1 = *pair.clustering1;
    const Clustering& truth2 = *pair.clustering2;

    // the layout must satisfy the step-0 seed this pipeline will score with
    Drawing d1;
    Drawing d2;
    bool faithful = false;
    for (uint32_t attempt = 0; attempt < kPipelineLayoutAttempts; ++attempt) {
        auto drawings =
            cluster_faithful_layout(pair, layout_stream(ds_seed, attempt));
        uint64_t check = kmeans_stream(ds_seed, 0);
        if (recovers(truth1, drawings.first, check) &&
            recovers(truth2, drawings.second, check)) {
            d1 = std::move(drawings.first);
            d2 = std::move(drawings.second);
            faithful = true;
            break;
        }
    }
    if (!faithful) {
        raise(ErrorCode::LayoutNotFaithful,
              "dataset " + id + ": no layout satisfied the step-0 check");
    }

    DatasetTrace trace;
    trace.dataset_id = id;
    Drawing current = d2;
    for (uint32_t step = 0; step <= steps; ++step) {
        if (step > 0) {
            double fraction =
                Rng(fraction_stream(ds_seed, step)).uniform(0.05, 0.1);
            current = deform_cluster_step(current,
                                          deform_stream(ds_seed, step),
                                          fraction);
        }
        uint64_t ks = kmeans_stream(ds_seed, step);
        Clustering geo1 =
            geometric_clustering(d1, truth1.cluster_count, ks);
        Clustering geo2 =
            geometric_clustering(current, truth2.cluster_count, ks);
        StepRecord record;
        record.step = step;
        record.metrics["cq_ari_1"] =
            cluster_index(truth1, geo1, ClusterIndex::Ari);
        record.metrics["cq_ari_2"] =
            cluster_index(truth2, geo2, ClusterIndex::Ari);
        record.metrics["cq_fmi_1"] =
            cluster_index(truth1, geo1, ClusterIndex::Fmi);
        record.metrics["cq_fmi_2"] =
            cluster_index(truth2, geo2, ClusterIndex::Fmi);
        ClusterChangeInput input{truth1, truth2, geo1, geo2};
        record.metrics["ccq_ari"] = ccq(input, ClusterIndex::Ari);
        record.metrics["ccq_fmi"] = ccq(input, ClusterIndex::Fmi);
        trace.per_step.push_back(std::move(record));
    }
    return trace;
}

DatasetTrace dcq_dataset_trace(const DynamicPair& pair, const std::string& id,
                               uint64_t ds_seed, uint32_t steps) {
    Drawing d1 = layout_stress_majorization(pair.slice1,
                                            layout_stream(ds_seed, 0));
    Drawing d2 = layout_stress_majorization(pair.slice2,
                                            layout_stream(ds_seed, 1));

    auto [stretch, shrink] = default_edge_split(pair.slice2, ds_seed);

    DistanceMatrix graph1 = all_pairs_graph_distance(pair.slice1);
    DistanceMatrix graph2 = all_pairs_graph_distance(pair.slice2);
    uint32_t diam1 = diameter(graph1);
    uint32_t diam2 = diameter(graph2);

    DatasetTrace trace;
    trace.dataset_id = id;
    Drawing current = d2;
    double stress1 = stress(graph1, d1);
    for (uint32_t step = 0; step <= steps; ++step) {
        if (step > 0) {
            current = deform_distance_step(current, pair.slice2, stretch,
                                           shrink,
                                           deform_stream(ds_seed, step),
                                           kStretchFactor);
        }
        DistanceChangeInput input;
        input.graph1 = graph1;
        input.graph2 = graph2;
        input.geo1 = all_pairs_geometric_distance(d1);
        input.geo2 = all_pairs_geometric_distance(current);
        input.target_edge_length = average_edge_length(d1, current, pair);
        StepRecord record;
        record.step = step;
        record.metrics["dcq1"] = dcq1(input);
        record.metrics["dcq2"] = dcq2(input, diam1, diam2);
        record.metrics["stress_1"] = stress1;
        record.metrics["stress_2"] = stress(graph2, current);
        trace.per_step.push_back(std::move(record));
    }
    return trace;
}

} // namespace

ExperimentTrace run_ccq_validation(const ExperimentConfig& config) {
    DatasetSet set = resolve_datasets(config, DatasetKind::Cluster, "cluster");
    ExperimentTrace trace;
    trace.datasets.resize(set.pairs.size());
    for_each_index(static_cast<uint32_t>(set.pairs.size()), config.threads,
                   [&](uint32_t i) {
                       trace.datasets[i] = ccq_dataset_trace(
                           set.pairs[i], set.ids[i],
                           derive_seed(config.seed, i), config.steps);
                   });
    return trace;
}

ExperimentTrace run_dcq_validation(const ExperimentConfig& config) {
    DatasetSet set =
        resolve_datasets(config, DatasetKind::Distance, "distance");
    ExperimentTrace trace;
    trace.datasets.resize(set.pairs.size());
    for_each_index(static_cast<uint32_t>(set.pairs.size()), config.threads,
                   [&](uint32_t i) {
                       trace.datasets[i] = dcq_dataset_trace(
                           set.pairs[i], set.ids[i],
                           derive_seed(config.seed, i), config.steps);
                   });
    return trace;
}

namespace {

std::string substitute(std::string pattern, const std::string& key,
                       const std::string& value) {
    size_t at = 0;
    while ((at = pattern.find(key, at)) != std::string::npos) {
        pattern.replace(at, key.size(), value);
        at += value.size();
    }
    return pattern;
}

std::pair<Drawing, Drawing> comparison_drawings(const ComparisonLayout& layout,
                                                const DynamicPair& pair,
                                                const std::string& dataset_id,
                                                uint64_t lay_seed) {
    if (layout.builtin) {
        switch (*layout.builtin) {
        case LayoutChoice::StressMajorization:
            return {layout_stress_majorization(pair.slice1,
                                               derive_seed(lay_seed, 1)),
                    layout_stress_majorization(pair.slice2,
                                               derive_seed(lay_seed, 2))};
        case LayoutChoice::FruchtermanReingold:
            return {layout_fruchterman_reingold(pair.slice1,
                                                derive_seed(lay_seed, 1)),
                    layout_fruchterman_reingold(pair.slice2,
                                                derive_seed(lay_seed, 2))};
        case LayoutChoice::ClusterFaithful:
            return cluster_faithful_layout(pair, lay_seed);
        }
    }
    if (layout.import_pattern.empty()) {
        raise(ErrorCode::InvalidArgument,
              "layout " + layout.name +
                  " has neither a builtin nor an import pattern");
    }
    std::string base =
        substitute(layout.import_pattern, "{dataset}", dataset_id);
    return {load_coordinates(substitute(base, "{slice}", "1"),
                             pair.slice1.vertex_count),
            load_coordinates(substitute(base, "{slice}", "2"),
                             pair.slice2.vertex_count)};
}

} // namespace

ExperimentTrace run_layout_comparison(
    const ExperimentConfig& config, DatasetKind kind,
    const std::vector<ComparisonLayout>& layouts) {
    if (layouts.empty()) {
        raise(ErrorCode::InvalidArgument, "no layouts to compare");
    }
    const char* prefix = kind == DatasetKind::Cluster ? "cluster" : "distance";
    DatasetSet set = resolve_datasets(config, kind, prefix);

    auto ds_count = static_cast<uint32_t>(set.pairs.size());
    uint32_t jobs = ds_count * static_cast<uint32_t>(layouts.size());
    ExperimentTrace trace;
    trace.datasets.resize(jobs);
    for_each_index(jobs, config.threads, [&](uint32_t job) {
        uint32_t layout_index = job / ds_count;
        uint32_t i = job % ds_count;
        const ComparisonLayout& layout = layouts[layout_index];
        const DynamicPair& pair = set.pairs[i];
        uint64_t ds_seed = derive_seed(config.seed, i);
        uint64_t lay_seed = derive_seed(ds_seed, 1000 + layout_index);

        auto [d1, d2] =
            comparison_drawings(layout, pair, set.ids[i], lay_seed);
        if (d1.positions.size() != pair.slice1.vertex_count ||
            d2.positions.size() != pair.slice2.vertex_count) {
            raise(ErrorCode::SizeMismatch,
                  "layout " + layout.name + " drawing size mismatch on " +
                      set.ids[i]);
        }

        StepRecord record;
        record.step = 0;
        if (kind == DatasetKind::Cluster) {
            if (!pair.clustering1 || !pair.clustering2) {
                raise(ErrorCode::InvalidArgument,
                      "dataset " + set.ids[i] +
                          " carries no ground-truth clusterings");
            }
            uint64_t ks = kmeans_stream(ds_seed, 0);
            Clustering geo1 = geometric_clustering(
                d1, pair.clustering1->cluster_count, ks);
            Clustering geo2 = geometric_clustering(
                d2, pair.clustering2->cluster_count, ks);
            record.metrics["cq_ari_1"] = cluster_index(
                *pair.clustering1, geo1, ClusterIndex::Ari);
            record.metrics["cq_ari_2"] = cluster_index(
                *pair.clustering2, geo2, ClusterIndex::Ari);
            record.metrics["cq_fmi_1"] = cluster_index(
                *pair.clustering1, geo1, ClusterIndex::Fmi);
            record.metrics["cq_fmi_2"] = cluster_index(
                *pair.clustering2, geo2, ClusterIndex::Fmi);
            ClusterChangeInput input{*pair.clustering1, *pair.clustering2,
                                     geo1, geo2};
            record.metrics["ccq_ari"] = ccq(input, ClusterIndex::Ari);
            record.metrics["ccq_fmi"] = ccq(input, ClusterIndex::Fmi);
        } else {
            DistanceMatrix graph1 = all_pairs_graph_distance(pair.slice1);
            DistanceMatrix graph2 = all_pairs_graph_distance(pair.slice2);
            DistanceChangeInput input;
            input.graph1 = graph1;
            input.graph2 = graph2;
            input.geo1 = all_pairs_geometric_distance(d1);
            input.geo2 = all_pairs_geometric_distance(d2);
            input.target_edge_length = average_edge_length(d1, d2, pair);
            record.metrics["dcq1"] = dcq1(input);
            record.metrics["dcq2"] =
                dcq2(input, diameter(graph1), diameter(graph2));
            record.metrics["stress_1"] = stress(graph1, d1);
            record.metrics["stress_2"] = stress(graph2, d2);
        }

        DatasetTrace& out = trace.datasets[job];
        out.dataset_id = layout.name + "/" + set.ids[i];
        out.per_step.push_back(std::move(record));
    });
    return trace;
}

std::vector<ClusterGenSpec> default_cluster_specs(uint32_t count,
                                                  uint64_t seed) {
    if (count == 0) {
        raise(ErrorCode::InvalidArgument, "count must be positive");
    }
    std::vector<ClusterGenSpec> specs(count);
    for (uint32_t i = 0; i < count; ++i) {
        ClusterGenSpec& spec = specs[i];
        // Ladder from ~200 to ~1000 vertices over 8..12 clusters. Cluster
        // sizes span [s, s+2], so every roll keeps base * size inside
        // [200, 1000]. Few large clusters keep part of the structure
        // recoverable through all 10 deformation steps.
        uint32_t target = count > 1 ? 200 + (i * 750) / (count - 1) : 200;
        spec.base_vertex_count =
            count > 1 ? 8 + (i * 4) / (count - 1) : 8;
        uint32_t size =
            (target + spec.base_vertex_count - 1) / spec.base_vertex_count;
        spec.min_cluster_size = size;
        spec.max_cluster_size = size + 2;
        double split_target = spec.intra_density * 0.55;
        switch (i % 3) {
        case 0:
            spec.events = {MergeEvent{0, 1, spec.intra_density}};
            break;
        case 1:
            spec.events = {SplitEvent{0, split_target}};
            break;
        default:
            spec.events = {MergeEvent{2, 3, spec.intra_density},
                           SplitEvent{1, split_target}};
            break;
        }
        spec.seed = derive_seed(derive_seed(seed, i), 7);
    }
    return specs;
}

std::vector<DistanceGenSpec> default_distance_specs(uint32_t count,
                                                    uint64_t seed) {
    if (count == 0) {
        raise(ErrorCode::InvalidArgument, "count must be positive");
    }
    std::vector<DistanceGenSpec> specs(count);
    for (uint32_t i = 0; i < count; ++i) {
        DistanceGenSpec& spec = specs[i];
        spec.vertex_count =
            count > 1 ? 20 + (i * 280) / (count - 1) : 60;
        spec.backbone = i % 2 == 0 ? Backbone::Tree : Backbone::Path;
        spec.shortcut_count = 3 + spec.vertex_count / 60;
        spec.seed = derive_seed(derive_seed(seed, i), 7);
    }
    return specs;
}

std::pair<EdgeList, EdgeList> default_edge_split(const TimeSlice& slice2,
                                                 uint64_t ds_seed) {
    EdgeList shuffled = slice2.edges;
    Rng rng(split_stream(ds_seed));
    rng.shuffle(shuffled);
    size_t half = shuffled.size() / 2;
    EdgeList stretch(shuffled.begin(), shuffled.begin() + half);
    EdgeList shrink(shuffled.begin() + half, shuffled.end());
    return {std::move(stretch), std::move(shrink)};
}

} // namespace dgcf
