#include "trace.hpp"

#include <cmath>

#include "error.hpp"

namespace dgcf {

std::vector<StepRecord> aggregate_means(const ExperimentTrace& trace) {
    if (trace.datasets.empty() || trace.datasets.front().per_step.empty()) {
        raise(ErrorCode::InvalidArgument, "trace holds no step records");
    }
    const auto& reference = trace.datasets.front().per_step;
    const MetricReport& names = reference.front().metrics;
    for (const DatasetTrace& ds : trace.datasets) {
        if (ds.per_step.size() != reference.size()) {
            raise(ErrorCode::InvalidArgument,
                  "dataset " + ds.dataset_id + " has " +
                      std::to_string(ds.per_step.size()) +
                      " steps, expected " +
                      std::to_string(reference.size()));
        }
        for (size_t s = 0; s < ds.per_step.size(); ++s) {
            if (ds.per_step[s].step != s) {
                raise(ErrorCode::InvalidArgument,
                      "dataset " + ds.dataset_id +
                          " steps are not contiguous from 0");
            }
            const MetricReport& metrics = ds.per_step[s].metrics;
            if (metrics.size() != names.size()) {
                raise(ErrorCode::InvalidArgument,
                      "dataset " + ds.dataset_id +
                          " carries a different metric set");
            }
            auto it = metrics.begin();
            auto ref = names.begin();
            for (; it != metrics.end(); ++it, ++ref) {
                if (it->first != ref->first) {
                    raise(ErrorCode::InvalidArgument,
                          "dataset " + ds.dataset_id +
                              " carries a different metric set");
                }
                if (!std::isfinite(it->second)) {
                    raise(ErrorCode::InvalidArgument,
                          "non-finite value for " + it->first + " in " +
                              ds.dataset_id);
                }
            }
        }
    }

    std::vector<StepRecord> means(reference.size());
    double count = static_cast<double>(trace.datasets.size());
    for (size_t s = 0; s < reference.size(); ++s) {
        means[s].step = static_cast<uint32_t>(s);
        for (const auto& [name, unused] : names) {
            (void)unused;
            double total = 0.0;
            for (const DatasetTrace& ds : trace.datasets) {
                total += ds.per_step[s].metrics.at(name);
            }
            means[s].metrics[name] = total / count;
        }
    }
    return means;
}

} // namespace dgcf
