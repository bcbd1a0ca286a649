#pragma once

#include <string>

#include "trace.hpp"

namespace dgcf {

// CSV with header dataset,step,metric,value; one row per metric value,
// datasets and steps in trace order, metrics alphabetical. Values are
// printed with enough digits to round-trip exactly.
void write_results_csv(const ExperimentTrace& trace, const std::string& path);
ExperimentTrace read_results_csv(const std::string& path);

// Line chart of the aggregate means, one series per metric.
void render_trend_svg(const ExperimentTrace& trace, const std::string& path);

} // namespace dgcf
