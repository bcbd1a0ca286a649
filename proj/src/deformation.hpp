#pragma once

#include <cstdint>

#include "graph.hpp"

namespace dgcf {

// Displaces every vertex independently: uniform random direction, magnitude
// uniform in [0, bounding_box_size(drawing) * fraction]. Steps compound when
// the result is fed back in.
Drawing deform_cluster_step(const Drawing& drawing, uint64_t seed,
                            double fraction);

// Rescales drawn edge lengths: edges in stretch_set multiply by factor,
// edges in shrink_set by 1/factor. For each edge the lower-degree endpoint
// (ties to the lower index) slides along the edge direction; edges are
// processed in sorted order, stretch set first. subset_fraction picks a
// random portion of each set per call (1.0 deforms all).
Drawing deform_distance_step(const Drawing& drawing, const TimeSlice& slice,
                             const EdgeList& stretch_set,
                             const EdgeList& shrink_set, uint64_t seed,
                             double factor, double subset_fraction = 1.0);

} // namespace dgcf
