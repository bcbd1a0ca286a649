#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace dgcf {

struct SmacofOptions {
    uint32_t max_iter = 300;
    double tol = 1e-6; // relative stress decrease that counts as converged
};

// Stress majorization (SMACOF) over the full hop-distance matrix with
// weights delta^-2. The random start is pre-scaled to its optimal scale, so
// the result never scores worse than the start under stress(). If
// stress_trace is given it receives the raw weighted stress at the start
// and after every iteration; that sequence is non-increasing.
Drawing layout_stress_majorization(const TimeSlice& slice, uint64_t seed,
                                   const SmacofOptions& options = {},
                                   std::vector<double>* stress_trace = nullptr);

// Classic force-directed layout with linear cooling; ideal edge length 1.
Drawing layout_fruchterman_reingold(const TimeSlice& slice, uint64_t seed,
                                    uint32_t iterations = 200);

// Draws both slices so that k-means on the drawing recovers the ground-truth
// clustering exactly: clusters sit at well-separated centroids taken from a
// stress-majorized quotient graph, members are arranged by a force layout
// inside a small disk around their centroid. Each attempt is verified;
// retries with derived sub-seeds up to 10 times.
std::pair<Drawing, Drawing> cluster_faithful_layout(const DynamicPair& pair,
                                                    uint64_t seed);

} // namespace dgcf
