#include "dgcf/dgcf.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "change_metrics.hpp"
#include "cluster_compare.hpp"
#include "dataset_io.hpp"
#include "deformation.hpp"
#include "error.hpp"
#include "experiments.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "layouts.hpp"
#include "results_io.hpp"

struct dgcf_pair {
    dgcf::DynamicPair value;
};
struct dgcf_drawing {
    dgcf::Drawing value;
};
struct dgcf_trace {
    dgcf::ExperimentTrace value;
};

namespace {

thread_local std::string t_last_error;

dgcf_status map_code(dgcf::ErrorCode code) {
    using dgcf::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument:
        return DGCF_INVALID_ARGUMENT;
    case ErrorCode::SizeMismatch:
        return DGCF_SIZE_MISMATCH;
    case ErrorCode::DisconnectedGraph:
        return DGCF_DISCONNECTED_GRAPH;
    case ErrorCode::DegenerateDrawing:
        return DGCF_DEGENERATE_DRAWING;
    case ErrorCode::TooFewPoints:
        return DGCF_TOO_FEW_POINTS;
    case ErrorCode::InfeasibleSpec:
        return DGCF_INFEASIBLE_SPEC;
    case ErrorCode::LayoutNotFaithful:
        return DGCF_LAYOUT_NOT_FAITHFUL;
    case ErrorCode::InvalidEdgeSet:
        return DGCF_INVALID_EDGE_SET;
    case ErrorCode::MissingCoordinates:
        return DGCF_MISSING_COORDINATES;
    case ErrorCode::ParseError:
        return DGCF_PARSE_ERROR;
    case ErrorCode::IoError:
        return DGCF_IO_ERROR;
    }
    return DGCF_INTERNAL_ERROR;
}

dgcf_status fail(dgcf_status status, const char* message) {
    t_last_error = message;
    return status;
}

template <typename Fn>
dgcf_status guarded(Fn&& fn) {
    try {
        fn();
        return DGCF_OK;
    } catch (const dgcf::Error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return DGCF_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return DGCF_INTERNAL_ERROR;
    }
}

dgcf::EdgeList edges_from_flat(const uint32_t* edges, size_t count,
                               const char* label) {
    if (count > 0 && edges == nullptr) {
        dgcf::raise(dgcf::ErrorCode::InvalidArgument,
                    std::string(label) + " is NULL with nonzero count");
    }
    dgcf::EdgeList list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        list.push_back({edges[2 * i], edges[2 * i + 1]});
    }
    return list;
}

const dgcf::TimeSlice& slice_of(const dgcf_pair* pair, int slice) {
    if (slice != 1 && slice != 2) {
        dgcf::raise(dgcf::ErrorCode::InvalidArgument,
                    "slice selector must be 1 or 2");
    }
    return slice == 1 ? pair->value.slice1 : pair->value.slice2;
}

void require(bool ok, const char* message) {
    if (!ok) {
        dgcf::raise(dgcf::ErrorCode::InvalidArgument, message);
    }
}

dgcf::ClusterIndex index_of(int index) {
    require(index == DGCF_INDEX_ARI || index == DGCF_INDEX_FMI,
            "index must be DGCF_INDEX_ARI or DGCF_INDEX_FMI");
    return index == DGCF_INDEX_ARI ? dgcf::ClusterIndex::Ari
                                   : dgcf::ClusterIndex::Fmi;
}

dgcf::ExperimentConfig config_of(const dgcf_experiment_config* config,
                                 const dgcf_pair* const* datasets,
                                 const char* const* ids,
                                 size_t dataset_count_in) {
    require(config != nullptr, "config is NULL");
    dgcf::ExperimentConfig out;
    out.dataset_count = config->dataset_count;
    out.steps = config->steps;
    out.seed = config->seed;
    out.threads = config->threads;
    if (config->emit_dataset_dir != nullptr) {
        out.emit_dataset_dir = config->emit_dataset_dir;
    }
    if (dataset_count_in > 0) {
        require(datasets != nullptr, "datasets is NULL with nonzero count");
        for (size_t i = 0; i < dataset_count_in; ++i) {
            require(datasets[i] != nullptr, "datasets contains a NULL entry");
            out.datasets.push_back(datasets[i]->value);
            if (ids != nullptr) {
                require(ids[i] != nullptr, "ids contains a NULL entry");
                out.dataset_ids.push_back(ids[i]);
            }
        }
    }
    return out;
}

} // namespace

extern "C" {

const char* dgcf_last_error(void) { return t_last_error.c_str(); }

const char* dgcf_status_name(dgcf_status status) {
    switch (status) {
    case DGCF_OK:
        return "ok";
    case DGCF_INVALID_ARGUMENT:
        return "invalid argument";
    case DGCF_SIZE_MISMATCH:
        return "size mismatch";
    case DGCF_DISCONNECTED_GRAPH:
        return "disconnected graph";
    case DGCF_DEGENERATE_DRAWING:
        return "degenerate drawing";
    case DGCF_TOO_FEW_POINTS:
        return "too few points";
    case DGCF_INFEASIBLE_SPEC:
        return "infeasible spec";
    case DGCF_LAYOUT_NOT_FAITHFUL:
        return "layout not faithful";
    case DGCF_INVALID_EDGE_SET:
        return "invalid edge set";
    case DGCF_MISSING_COORDINATES:
        return "missing coordinates";
    case DGCF_PARSE_ERROR:
        return "parse error";
    case DGCF_IO_ERROR:
        return "io error";
    case DGCF_INTERNAL_ERROR:
        return "internal error";
    }
    return "unknown status";
}

void dgcf_pair_free(dgcf_pair* pair) { delete pair; }
void dgcf_drawing_free(dgcf_drawing* drawing) { delete drawing; }
void dgcf_trace_free(dgcf_trace* trace) { delete trace; }

dgcf_status dgcf_pair_create(uint32_t vertex_count, const uint32_t* edges1,
                             size_t edge_count1, const uint32_t* edges2,
                             size_t edge_count2, const uint32_t* clusters1,
                             const uint32_t* clusters2, dgcf_pair** out) {
    if (out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "out is NULL");
    }
    return guarded([&] {
        dgcf::TimeSlice s1 = dgcf::make_slice(
            vertex_count, edges_from_flat(edges1, edge_count1, "edges1"));
        dgcf::TimeSlice s2 = dgcf::make_slice(
            vertex_count, edges_from_flat(edges2, edge_count2, "edges2"));
        std::optional<dgcf::Clustering> c1;
        std::optional<dgcf::Clustering> c2;
        if (clusters1 != nullptr) {
            c1 = dgcf::make_clustering(
                {clusters1, clusters1 + vertex_count});
        }
        if (clusters2 != nullptr) {
            c2 = dgcf::make_clustering(
                {clusters2, clusters2 + vertex_count});
        }
        *out = new dgcf_pair{dgcf::make_pair(std::move(s1), std::move(s2),
                                             std::move(c1), std::move(c2))};
    });
}

dgcf_status dgcf_pair_load(const char* path, dgcf_pair** out) {
    if (out == nullptr || path == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "path or out is NULL");
    }
    return guarded([&] { *out = new dgcf_pair{dgcf::load_dataset(path)}; });
}

dgcf_status dgcf_pair_save(const dgcf_pair* pair, const char* path) {
    if (pair == nullptr || path == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair or path is NULL");
    }
    return guarded([&] { dgcf::save_dataset(pair->value, path); });
}

uint32_t dgcf_pair_vertex_count(const dgcf_pair* pair) {
    return pair == nullptr ? 0 : pair->value.slice1.vertex_count;
}

size_t dgcf_pair_edge_count(const dgcf_pair* pair, int slice) {
    if (pair == nullptr || (slice != 1 && slice != 2)) {
        return 0;
    }
    return slice == 1 ? pair->value.slice1.edges.size()
                      : pair->value.slice2.edges.size();
}

dgcf_status dgcf_pair_copy_edges(const dgcf_pair* pair, int slice,
                                 uint32_t* edges, size_t capacity) {
    if (pair == nullptr || edges == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair or edges is NULL");
    }
    return guarded([&] {
        const dgcf::EdgeList& list = slice_of(pair, slice).edges;
        require(capacity >= 2 * list.size(), "edge buffer too small");
        for (size_t i = 0; i < list.size(); ++i) {
            edges[2 * i] = list[i].first;
            edges[2 * i + 1] = list[i].second;
        }
    });
}

int dgcf_pair_has_clusterings(const dgcf_pair* pair) {
    return pair != nullptr && pair->value.clustering1 &&
                   pair->value.clustering2
               ? 1
               : 0;
}

dgcf_status dgcf_pair_copy_clusters(const dgcf_pair* pair, int slice,
                                    uint32_t* labels, size_t capacity) {
    if (pair == nullptr || labels == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair or labels is NULL");
    }
    return guarded([&] {
        slice_of(pair, slice); // validates the selector
        const auto& clustering = slice == 1 ? pair->value.clustering1
                                            : pair->value.clustering2;
        require(clustering.has_value(),
                "pair carries no clustering for this slice");
        require(capacity >= clustering->labels.size(),
                "label buffer too small");
        std::memcpy(labels, clustering->labels.data(),
                    clustering->labels.size() * sizeof(uint32_t));
    });
}

void dgcf_cluster_spec_init(dgcf_cluster_spec* spec) {
    if (spec == nullptr) {
        return;
    }
    dgcf::ClusterGenSpec defaults;
    spec->base_vertex_count = defaults.base_vertex_count;
    spec->min_cluster_size = defaults.min_cluster_size;
    spec->max_cluster_size = defaults.max_cluster_size;
    spec->intra_density = defaults.intra_density;
    spec->inter_edge_count = defaults.inter_edge_count;
    spec->events = nullptr;
    spec->event_count = 0;
    spec->seed = defaults.seed;
}

void dgcf_distance_spec_init(dgcf_distance_spec* spec) {
    if (spec == nullptr) {
        return;
    }
    dgcf::DistanceGenSpec defaults;
    spec->vertex_count = defaults.vertex_count;
    spec->backbone = defaults.backbone == dgcf::Backbone::Tree
                         ? DGCF_BACKBONE_TREE
                         : DGCF_BACKBONE_PATH;
    spec->shortcut_count = defaults.shortcut_count;
    spec->diameter_ratio = defaults.diameter_ratio;
    spec->min_diameter = defaults.min_diameter;
    spec->seed = defaults.seed;
}

dgcf_status dgcf_generate_cluster_pair(const dgcf_cluster_spec* spec,
                                       dgcf_pair** out) {
    if (spec == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "spec or out is NULL");
    }
    return guarded([&] {
        dgcf::ClusterGenSpec cpp;
        cpp.base_vertex_count = spec->base_vertex_count;
        cpp.min_cluster_size = spec->min_cluster_size;
        cpp.max_cluster_size = spec->max_cluster_size;
        cpp.intra_density = spec->intra_density;
        cpp.inter_edge_count = spec->inter_edge_count;
        cpp.seed = spec->seed;
        if (spec->event_count > 0) {
            require(spec->events != nullptr,
                    "events is NULL with nonzero count");
            for (size_t i = 0; i < spec->event_count; ++i) {
                const dgcf_cluster_event& event = spec->events[i];
                if (event.kind == DGCF_EVENT_MERGE) {
                    cpp.events.push_back(dgcf::MergeEvent{
                        event.cluster_a, event.cluster_b,
                        event.target_density});
                } else if (event.kind == DGCF_EVENT_SPLIT) {
                    cpp.events.push_back(dgcf::SplitEvent{
                        event.cluster_a, event.target_density});
                } else {
                    dgcf::raise(dgcf::ErrorCode::InvalidArgument,
                                "unknown event kind");
                }
            }
        }
        *out = new dgcf_pair{dgcf::gen_cluster_pair(cpp)};
    });
}

dgcf_status dgcf_generate_distance_pair(const dgcf_distance_spec* spec,
                                        dgcf_pair** out) {
    if (spec == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "spec or out is NULL");
    }
    return guarded([&] {
        dgcf::DistanceGenSpec cpp;
        cpp.vertex_count = spec->vertex_count;
        if (spec->backbone == DGCF_BACKBONE_TREE) {
            cpp.backbone = dgcf::Backbone::Tree;
        } else if (spec->backbone == DGCF_BACKBONE_PATH) {
            cpp.backbone = dgcf::Backbone::Path;
        } else {
            dgcf::raise(dgcf::ErrorCode::InvalidArgument,
                        "unknown backbone kind");
        }
        cpp.shortcut_count = spec->shortcut_count;
        cpp.diameter_ratio = spec->diameter_ratio;
        cpp.min_diameter = spec->min_diameter;
        cpp.seed = spec->seed;
        *out = new dgcf_pair{dgcf::gen_distance_pair(cpp)};
    });
}

dgcf_status dgcf_drawing_create(const double* xy, uint32_t vertex_count,
                                dgcf_drawing** out) {
    if (out == nullptr || (xy == nullptr && vertex_count > 0)) {
        return fail(DGCF_INVALID_ARGUMENT, "xy or out is NULL");
    }
    return guarded([&] {
        std::vector<dgcf::Point> points(vertex_count);
        for (uint32_t i = 0; i < vertex_count; ++i) {
            points[i] = dgcf::Point{xy[2 * i], xy[2 * i + 1]};
        }
        *out = new dgcf_drawing{dgcf::make_drawing(std::move(points))};
    });
}

uint32_t dgcf_drawing_vertex_count(const dgcf_drawing* drawing) {
    return drawing == nullptr
               ? 0
               : static_cast<uint32_t>(drawing->value.positions.size());
}

dgcf_status dgcf_drawing_copy_positions(const dgcf_drawing* drawing,
                                        double* xy, size_t capacity) {
    if (drawing == nullptr || xy == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "drawing or xy is NULL");
    }
    return guarded([&] {
        const auto& positions = drawing->value.positions;
        require(capacity >= 2 * positions.size(),
                "position buffer too small");
        for (size_t i = 0; i < positions.size(); ++i) {
            xy[2 * i] = positions[i].x;
            xy[2 * i + 1] = positions[i].y;
        }
    });
}

dgcf_status dgcf_drawing_load(const char* path, uint32_t expected_n,
                              dgcf_drawing** out) {
    if (path == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "path or out is NULL");
    }
    return guarded([&] {
        *out = new dgcf_drawing{dgcf::load_coordinates(path, expected_n)};
    });
}

dgcf_status dgcf_drawing_save(const dgcf_drawing* drawing, const char* path) {
    if (drawing == nullptr || path == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "drawing or path is NULL");
    }
    return guarded([&] { dgcf::save_coordinates(drawing->value, path); });
}

dgcf_status dgcf_layout_stress_majorization(const dgcf_pair* pair, int slice,
                                            uint64_t seed, uint32_t max_iter,
                                            double tol, dgcf_drawing** out) {
    if (pair == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair or out is NULL");
    }
    return guarded([&] {
        dgcf::SmacofOptions options;
        if (max_iter != 0) {
            options.max_iter = max_iter;
        }
        if (tol != 0.0) {
            options.tol = tol;
        }
        *out = new dgcf_drawing{dgcf::layout_stress_majorization(
            slice_of(pair, slice), seed, options)};
    });
}

dgcf_status dgcf_layout_fruchterman_reingold(const dgcf_pair* pair, int slice,
                                             uint64_t seed,
                                             uint32_t iterations,
                                             dgcf_drawing** out) {
    if (pair == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair or out is NULL");
    }
    return guarded([&] {
        *out = new dgcf_drawing{dgcf::layout_fruchterman_reingold(
            slice_of(pair, slice), seed,
            iterations == 0 ? 200 : iterations)};
    });
}

dgcf_status dgcf_layout_cluster_faithful(const dgcf_pair* pair, uint64_t seed,
                                         dgcf_drawing** out1,
                                         dgcf_drawing** out2) {
    if (pair == nullptr || out1 == nullptr || out2 == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair or outputs are NULL");
    }
    return guarded([&] {
        auto [d1, d2] = dgcf::cluster_faithful_layout(pair->value, seed);
        *out1 = new dgcf_drawing{std::move(d1)};
        *out2 = new dgcf_drawing{std::move(d2)};
    });
}

dgcf_status dgcf_deform_cluster_step(const dgcf_drawing* drawing,
                                     uint64_t seed, double fraction,
                                     dgcf_drawing** out) {
    if (drawing == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "drawing or out is NULL");
    }
    return guarded([&] {
        *out = new dgcf_drawing{
            dgcf::deform_cluster_step(drawing->value, seed, fraction)};
    });
}

dgcf_status dgcf_deform_distance_step(
    const dgcf_drawing* drawing, const dgcf_pair* pair, int slice,
    const uint32_t* stretch_edges, size_t stretch_count,
    const uint32_t* shrink_edges, size_t shrink_count, uint64_t seed,
    double factor, double subset_fraction, dgcf_drawing** out) {
    if (drawing == nullptr || pair == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "drawing, pair, or out is NULL");
    }
    return guarded([&] {
        *out = new dgcf_drawing{dgcf::deform_distance_step(
            drawing->value, slice_of(pair, slice),
            edges_from_flat(stretch_edges, stretch_count, "stretch_edges"),
            edges_from_flat(shrink_edges, shrink_count, "shrink_edges"),
            seed, factor == 0.0 ? 1.15 : factor,
            subset_fraction == 0.0 ? 1.0 : subset_fraction)};
    });
}

void dgcf_pair_edge_split_sizes(const dgcf_pair* pair, size_t* stretch_count,
                                size_t* shrink_count) {
    size_t edges = pair == nullptr ? 0 : pair->value.slice2.edges.size();
    if (stretch_count != nullptr) {
        *stretch_count = edges / 2;
    }
    if (shrink_count != nullptr) {
        *shrink_count = edges - edges / 2;
    }
}

dgcf_status dgcf_pair_edge_split(const dgcf_pair* pair, uint64_t seed,
                                 uint32_t* stretch_edges,
                                 uint32_t* shrink_edges) {
    if (pair == nullptr || stretch_edges == nullptr ||
        shrink_edges == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair or buffers are NULL");
    }
    return guarded([&] {
        auto [stretch, shrink] =
            dgcf::default_edge_split(pair->value.slice2, seed);
        for (size_t i = 0; i < stretch.size(); ++i) {
            stretch_edges[2 * i] = stretch[i].first;
            stretch_edges[2 * i + 1] = stretch[i].second;
        }
        for (size_t i = 0; i < shrink.size(); ++i) {
            shrink_edges[2 * i] = shrink[i].first;
            shrink_edges[2 * i + 1] = shrink[i].second;
        }
    });
}

dgcf_status dgcf_metric_cq(const dgcf_pair* pair, int slice,
                           const dgcf_drawing* drawing, int index,
                           uint64_t seed, double* out) {
    if (pair == nullptr || drawing == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair, drawing, or out is NULL");
    }
    return guarded([&] {
        slice_of(pair, slice); // validates the selector
        const auto& clustering = slice == 1 ? pair->value.clustering1
                                            : pair->value.clustering2;
        require(clustering.has_value(),
                "pair carries no clustering for this slice");
        *out = dgcf::cq(*clustering, drawing->value, index_of(index), seed);
    });
}

dgcf_status dgcf_metric_ccq(const dgcf_pair* pair, const dgcf_drawing* d1,
                            const dgcf_drawing* d2, int index, uint64_t seed1,
                            uint64_t seed2, double* out) {
    if (pair == nullptr || d1 == nullptr || d2 == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "an argument is NULL");
    }
    return guarded([&] {
        *out = dgcf::ccq(pair->value, d1->value, d2->value, index_of(index),
                         seed1, seed2);
    });
}

dgcf_status dgcf_metric_dcq1(const dgcf_pair* pair, const dgcf_drawing* d1,
                             const dgcf_drawing* d2, double* out) {
    if (pair == nullptr || d1 == nullptr || d2 == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "an argument is NULL");
    }
    return guarded(
        [&] { *out = dgcf::dcq1(pair->value, d1->value, d2->value); });
}

dgcf_status dgcf_metric_dcq2(const dgcf_pair* pair, const dgcf_drawing* d1,
                             const dgcf_drawing* d2, double* out) {
    if (pair == nullptr || d1 == nullptr || d2 == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "an argument is NULL");
    }
    return guarded(
        [&] { *out = dgcf::dcq2(pair->value, d1->value, d2->value); });
}

dgcf_status dgcf_metric_stress(const dgcf_pair* pair, int slice,
                               const dgcf_drawing* drawing, double* out) {
    if (pair == nullptr || drawing == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "pair, drawing, or out is NULL");
    }
    return guarded([&] {
        *out = dgcf::stress(slice_of(pair, slice), drawing->value);
    });
}

void dgcf_experiment_config_init(dgcf_experiment_config* config) {
    if (config == nullptr) {
        return;
    }
    dgcf::ExperimentConfig defaults;
    config->dataset_count = defaults.dataset_count;
    config->steps = defaults.steps;
    config->seed = defaults.seed;
    config->threads = defaults.threads;
    config->emit_dataset_dir = nullptr;
}

dgcf_status dgcf_run_ccq_validation(const dgcf_experiment_config* config,
                                    const dgcf_pair* const* datasets,
                                    const char* const* ids,
                                    size_t dataset_count_in,
                                    dgcf_trace** out) {
    if (out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "out is NULL");
    }
    return guarded([&] {
        *out = new dgcf_trace{dgcf::run_ccq_validation(
            config_of(config, datasets, ids, dataset_count_in))};
    });
}

dgcf_status dgcf_run_dcq_validation(const dgcf_experiment_config* config,
                                    const dgcf_pair* const* datasets,
                                    const char* const* ids,
                                    size_t dataset_count_in,
                                    dgcf_trace** out) {
    if (out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "out is NULL");
    }
    return guarded([&] {
        *out = new dgcf_trace{dgcf::run_dcq_validation(
            config_of(config, datasets, ids, dataset_count_in))};
    });
}

dgcf_status dgcf_run_layout_comparison(
    const dgcf_experiment_config* config, int kind,
    const dgcf_comparison_layout* layouts, size_t layout_count,
    const dgcf_pair* const* datasets, const char* const* ids,
    size_t dataset_count_in, dgcf_trace** out) {
    if (out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "out is NULL");
    }
    return guarded([&] {
        require(kind == DGCF_DATASET_CLUSTER || kind == DGCF_DATASET_DISTANCE,
                "kind must be a dgcf_dataset_kind");
        require(layouts != nullptr || layout_count == 0,
                "layouts is NULL with nonzero count");
        std::vector<dgcf::ComparisonLayout> list;
        for (size_t i = 0; i < layout_count; ++i) {
            const dgcf_comparison_layout& in = layouts[i];
            require(in.name != nullptr, "layout name is NULL");
            dgcf::ComparisonLayout layout;
            layout.name = in.name;
            switch (in.builtin) {
            case DGCF_LAYOUT_IMPORTED:
                require(in.import_pattern != nullptr,
                        "imported layout needs an import_pattern");
                layout.import_pattern = in.import_pattern;
                break;
            case DGCF_LAYOUT_STRESS_MAJORIZATION:
                layout.builtin = dgcf::LayoutChoice::StressMajorization;
                break;
            case DGCF_LAYOUT_FRUCHTERMAN_REINGOLD:
                layout.builtin = dgcf::LayoutChoice::FruchtermanReingold;
                break;
            case DGCF_LAYOUT_CLUSTER_FAITHFUL:
                layout.builtin = dgcf::LayoutChoice::ClusterFaithful;
                break;
            default:
                dgcf::raise(dgcf::ErrorCode::InvalidArgument,
                            "unknown layout choice");
            }
            list.push_back(std::move(layout));
        }
        *out = new dgcf_trace{dgcf::run_layout_comparison(
            config_of(config, datasets, ids, dataset_count_in),
            kind == DGCF_DATASET_CLUSTER ? dgcf::DatasetKind::Cluster
                                         : dgcf::DatasetKind::Distance,
            list)};
    });
}

size_t dgcf_trace_dataset_count(const dgcf_trace* trace) {
    return trace == nullptr ? 0 : trace->value.datasets.size();
}

const char* dgcf_trace_dataset_id(const dgcf_trace* trace, size_t dataset) {
    if (trace == nullptr || dataset >= trace->value.datasets.size()) {
        t_last_error = "dataset index out of range";
        return nullptr;
    }
    return trace->value.datasets[dataset].dataset_id.c_str();
}

size_t dgcf_trace_step_count(const dgcf_trace* trace, size_t dataset) {
    if (trace == nullptr || dataset >= trace->value.datasets.size()) {
        return 0;
    }
    return trace->value.datasets[dataset].per_step.size();
}

size_t dgcf_trace_metric_count(const dgcf_trace* trace, size_t dataset,
                               size_t step) {
    if (trace == nullptr || dataset >= trace->value.datasets.size() ||
        step >= trace->value.datasets[dataset].per_step.size()) {
        return 0;
    }
    return trace->value.datasets[dataset].per_step[step].metrics.size();
}

const char* dgcf_trace_metric_name(const dgcf_trace* trace, size_t dataset,
                                   size_t step, size_t metric) {
    if (trace == nullptr || dataset >= trace->value.datasets.size() ||
        step >= trace->value.datasets[dataset].per_step.size()) {
        t_last_error = "trace index out of range";
        return nullptr;
    }
    const auto& metrics = trace->value.datasets[dataset].per_step[step].metrics;
    if (metric >= metrics.size()) {
        t_last_error = "metric index out of range";
        return nullptr;
    }
    auto it = metrics.begin();
    std::advance(it, static_cast<long>(metric));
    return it->first.c_str();
}

dgcf_status dgcf_trace_value(const dgcf_trace* trace, size_t dataset,
                             size_t step, const char* metric, double* out) {
    if (trace == nullptr || metric == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "trace, metric, or out is NULL");
    }
    return guarded([&] {
        require(dataset < trace->value.datasets.size(),
                "dataset index out of range");
        const auto& ds = trace->value.datasets[dataset];
        require(step < ds.per_step.size(), "step index out of range");
        auto it = ds.per_step[step].metrics.find(metric);
        require(it != ds.per_step[step].metrics.end(),
                "metric not present in this trace");
        *out = it->second;
    });
}

dgcf_status dgcf_trace_aggregate(const dgcf_trace* trace, size_t step,
                                 const char* metric, double* out) {
    if (trace == nullptr || metric == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "trace, metric, or out is NULL");
    }
    return guarded([&] {
        auto means = dgcf::aggregate_means(trace->value);
        require(step < means.size(), "step index out of range");
        auto it = means[step].metrics.find(metric);
        require(it != means[step].metrics.end(),
                "metric not present in this trace");
        *out = it->second;
    });
}

dgcf_status dgcf_trace_write_csv(const dgcf_trace* trace, const char* path) {
    if (trace == nullptr || path == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "trace or path is NULL");
    }
    return guarded([&] { dgcf::write_results_csv(trace->value, path); });
}

dgcf_status dgcf_trace_read_csv(const char* path, dgcf_trace** out) {
    if (path == nullptr || out == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "path or out is NULL");
    }
    return guarded(
        [&] { *out = new dgcf_trace{dgcf::read_results_csv(path)}; });
}

dgcf_status dgcf_trace_render_svg(const dgcf_trace* trace, const char* path) {
    if (trace == nullptr || path == nullptr) {
        return fail(DGCF_INVALID_ARGUMENT, "trace or path is NULL");
    }
    return guarded([&] { dgcf::render_trend_svg(trace->value, path); });
}

} // extern "C"
