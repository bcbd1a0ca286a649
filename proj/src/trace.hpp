#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dgcf {

// Named metric values for one step; only the metrics the experiment
// computes are present, and every step of a trace carries the same set.
using MetricReport = std::map<std::string, double>;

struct StepRecord {
    uint32_t step = 0;
    MetricReport metrics;
};

struct DatasetTrace {
    std::string dataset_id;
    std::vector<StepRecord> per_step; // steps contiguous from 0
};

struct ExperimentTrace {
    std::vector<DatasetTrace> datasets;
};

// Mean per metric per step across datasets. Validates that every dataset
// carries the same contiguous steps and the same metric names.
std::vector<StepRecord> aggregate_means(const ExperimentTrace& trace);

} // namespace dgcf
