#include "dataset_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "io_util.hpp"

namespace dgcf {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path,
                             const std::string& detail) {
    raise(ErrorCode::ParseError, path + ": " + detail);
}

uint64_t require_uint(const json& value, const std::string& path,
                      const std::string& field) {
    if (!value.is_number_integer() && !value.is_number_unsigned()) {
        parse_fail(path, field + " must be an integer");
    }
    if (value.is_number_integer() && value.get<int64_t>() < 0) {
        parse_fail(path, field + " must be non-negative");
    }
    return value.get<uint64_t>();
}

EdgeList parse_edges(const json& array, const std::string& path,
                     const std::string& field, uint64_t n) {
    if (!array.is_array()) {
        parse_fail(path, field + " must be an array");
    }
    EdgeList edges;
    edges.reserve(array.size());
    for (size_t k = 0; k < array.size(); ++k) {
        const json& entry = array[k];
        std::string where = field + "[" + std::to_string(k) + "]";
        if (!entry.is_array() || entry.size() != 2) {
            parse_fail(path, where + " must be a pair [i, j]");
        }
        uint64_t u = require_uint(entry[0], path, where + "[0]");
        uint64_t v = require_uint(entry[1], path, where + "[1]");
        if (u >= n || v >= n) {
            parse_fail(path, where + " = (" + std::to_string(u) + ", " +
                                 std::to_string(v) +
                                 ") out of range for n = " +
                                 std::to_string(n));
        }
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    return edges;
}

std::optional<Clustering> parse_clusters(const json& root,
                                         const std::string& path,
                                         const std::string& field,
                                         uint64_t n) {
    if (!root.contains(field)) {
        return std::nullopt;
    }
    const json& array = root[field];
    if (!array.is_array()) {
        parse_fail(path, field + " must be an array");
    }
    if (array.size() != n) {
        parse_fail(path, field + " has " + std::to_string(array.size()) +
                             " labels for n = " + std::to_string(n));
    }
    std::vector<uint32_t> labels(n);
    for (size_t k = 0; k < n; ++k) {
        labels[k] = static_cast<uint32_t>(require_uint(
            array[k], path, field + "[" + std::to_string(k) + "]"));
    }
    try {
        return make_clustering(std::move(labels));
    } catch (const Error& e) {
        parse_fail(path, field + ": " + e.what());
    }
}

} // namespace

DynamicPair load_dataset(const std::string& path) {
    std::string text = read_text_file(path);
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(path, e.what());
    }
    if (!root.is_object()) {
        parse_fail(path, "top level must be an object");
    }
    if (!root.contains("n") || !root.contains("edges1") ||
        !root.contains("edges2")) {
        parse_fail(path, "required fields: n, edges1, edges2");
    }
    uint64_t n = require_uint(root["n"], path, "n");
    if (n == 0 || n > UINT32_MAX) {
        parse_fail(path, "n = " + std::to_string(n) + " out of range");
    }

    EdgeList edges1 = parse_edges(root["edges1"], path, "edges1", n);
    EdgeList edges2 = parse_edges(root["edges2"], path, "edges2", n);
    TimeSlice slice1;
    TimeSlice slice2;
    try {
        slice1 = make_slice(static_cast<uint32_t>(n), std::move(edges1));
        slice2 = make_slice(static_cast<uint32_t>(n), std::move(edges2));
    } catch (const Error& e) {
        parse_fail(path, e.what());
    }
    if (!is_connected(slice1) || !is_connected(slice2)) {
        raise(ErrorCode::DisconnectedGraph,
              path + ": slices must be connected");
    }
    return make_pair(std::move(slice1), std::move(slice2),
                     parse_clusters(root, path, "clusters1", n),
                     parse_clusters(root, path, "clusters2", n));
}

void save_dataset(const DynamicPair& pair, const std::string& path) {
    json root;
    root["n"] = pair.slice1.vertex_count;
    auto edges_json = [](const EdgeList& edges) {
        json array = json::array();
        for (const auto& [u, v] : edges) {
            array.push_back(json::array({u, v}));
        }
        return array;
    };
    root["edges1"] = edges_json(pair.slice1.edges);
    root["edges2"] = edges_json(pair.slice2.edges);
    if (pair.clustering1) {
        root["clusters1"] = pair.clustering1->labels;
    }
    if (pair.clustering2) {
        root["clusters2"] = pair.clustering2->labels;
    }
    write_text_file(path, root.dump(2) + "\n");
}

Drawing load_coordinates(const std::string& path, uint32_t expected_n) {
    std::string text = read_text_file(path);
    std::istringstream stream(text);
    std::vector<Point> positions(expected_n, Point{0.0, 0.0});
    std::vector<bool> seen(expected_n, false);
    std::string line;
    size_t line_no = 0;
    size_t filled = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string tok_index;
        if (!(fields >> tok_index)) {
            continue; // blank or comment-only line
        }
        std::string tok_x;
        std::string tok_y;
        std::string extra;
        if (!(fields >> tok_x >> tok_y) || (fields >> extra)) {
            parse_fail(path, "line " + std::to_string(line_no) +
                                 ": expected 'index x y'");
        }
        char* end = nullptr;
        uint64_t index = std::strtoull(tok_index.c_str(), &end, 10);
        if (end == tok_index.c_str() || *end != '\0') {
            parse_fail(path, "line " + std::to_string(line_no) +
                                 ": bad vertex index '" + tok_index + "'");
        }
        if (index >= expected_n) {
            parse_fail(path, "line " + std::to_string(line_no) + ": index " +
                                 std::to_string(index) +
                                 " out of range for n = " +
                                 std::to_string(expected_n));
        }
        if (seen[index]) {
            parse_fail(path, "line " + std::to_string(line_no) +
                                 ": duplicate index " +
                                 std::to_string(index));
        }
        double x = std::strtod(tok_x.c_str(), &end);
        if (end == tok_x.c_str() || *end != '\0') {
            parse_fail(path, "line " + std::to_string(line_no) +
                                 ": bad coordinate '" + tok_x + "'");
        }
        double y = std::strtod(tok_y.c_str(), &end);
        if (end == tok_y.c_str() || *end != '\0') {
            parse_fail(path, "line " + std::to_string(line_no) +
                                 ": bad coordinate '" + tok_y + "'");
        }
        seen[index] = true;
        positions[index] = Point{x, y};
        ++filled;
    }
    if (filled != expected_n) {
        uint32_t first_missing = 0;
        while (first_missing < expected_n && seen[first_missing]) {
            ++first_missing;
        }
        raise(ErrorCode::MissingCoordinates,
              path + ": " + std::to_string(expected_n - filled) +
                  " of " + std::to_string(expected_n) +
                  " vertices missing, first is " +
                  std::to_string(first_missing));
    }
    try {
        return make_drawing(std::move(positions));
    } catch (const Error& e) {
        parse_fail(path, e.what());
    }
}

void save_coordinates(const Drawing& drawing, const std::string& path) {
    std::string out = "# index x y\n";
    char buffer[96];
    for (size_t i = 0; i < drawing.positions.size(); ++i) {
        std::snprintf(buffer, sizeof(buffer), "%zu %.17g %.17g\n", i,
                      drawing.positions[i].x, drawing.positions[i].y);
        out += buffer;
    }
    write_text_file(path, out);
}

} // namespace dgcf
