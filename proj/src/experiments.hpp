#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "trace.hpp"

namespace dgcf {

// Rank correlation with average ranks for ties; 0 when either side has no
// variance.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

struct ExperimentConfig {
    uint32_t dataset_count = 10;
    uint32_t steps = 10;
    uint64_t seed = 0;
    uint32_t threads = 1; // 0 picks the hardware thread count

    // Preloaded inputs replace generation; ids run parallel to datasets and
    // default to ds-<index>.
    std::vector<DynamicPair> datasets;
    std::vector<std::string> dataset_ids;

    // When set, generated datasets are saved here as <id>.json.
    std::string emit_dataset_dir;
};

// Cluster-change validation: faithful layouts, then cumulative vertex
// displacement on the second drawing; records cq_*_1/2, ccq_ari, ccq_fmi
// per step. Results are independent of the worker count.
ExperimentTrace run_ccq_validation(const ExperimentConfig& config);

// Distance-change validation: stress-majorized layouts, then cumulative
// edge stretch/shrink on the second drawing; records dcq1, dcq2,
// stress_1, stress_2 per step.
ExperimentTrace run_dcq_validation(const ExperimentConfig& config);

enum class LayoutChoice {
    StressMajorization,
    FruchtermanReingold,
    ClusterFaithful,
};

// One column of a layout comparison: a built-in algorithm or coordinate
// files matching a pattern with {dataset} and {slice} placeholders.
struct ComparisonLayout {
    std::string name;
    std::optional<LayoutChoice> builtin;
    std::string import_pattern;
};

enum class DatasetKind { Cluster, Distance };

// Scores every layout on every dataset (single step-0 record per pair);
// cluster kind records cq/ccq metrics, distance kind stress/dcq metrics.
// Dataset ids in the result are "<layout>/<dataset>".
ExperimentTrace run_layout_comparison(
    const ExperimentConfig& config, DatasetKind kind,
    const std::vector<ComparisonLayout>& layouts);

// Default dataset ladders used when a config carries no preloaded datasets.
std::vector<ClusterGenSpec> default_cluster_specs(uint32_t count,
                                                  uint64_t seed);
std::vector<DistanceGenSpec> default_distance_specs(uint32_t count,
                                                    uint64_t seed);

// The distance pipeline's fixed 50/50 edge split (stretch set, shrink set)
// for a dataset-level seed.
std::pair<EdgeList, EdgeList> default_edge_split(const TimeSlice& slice2,
                                                 uint64_t ds_seed);

} // namespace dgcf
