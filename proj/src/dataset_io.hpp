#pragma once

#include <string>

#include "graph.hpp"

namespace dgcf {

// JSON datasets: { "n": int, "edges1": [[i,j]...], "edges2": [[i,j]...],
// "clusters1": [int...]?, "clusters2": [int...]? }. The loader rejects
// disconnected slices; distance metrics have no value for unreachable pairs.
DynamicPair load_dataset(const std::string& path);
void save_dataset(const DynamicPair& pair, const std::string& path);

// Coordinates: whitespace-separated "index x y" lines, '#' starts a comment.
Drawing load_coordinates(const std::string& path, uint32_t expected_n);
void save_coordinates(const Drawing& drawing, const std::string& path);

} // namespace dgcf
