// dgcf: command-line frontend for the change-faithfulness library.
// Talks to the core exclusively through the public C interface.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <dgcf/dgcf.h>

namespace {

struct StatusError : std::runtime_error {
    dgcf_status status;
    StatusError(dgcf_status s, const std::string& message)
        : std::runtime_error(message), status(s) {}
};

void check(dgcf_status status) {
    if (status != DGCF_OK) {
        throw StatusError(status, std::string(dgcf_status_name(status)) +
                                      ": " + dgcf_last_error());
    }
}

[[noreturn]] void invalid(const std::string& message) {
    throw StatusError(DGCF_INVALID_ARGUMENT, message);
}

struct PairDeleter {
    void operator()(dgcf_pair* p) const { dgcf_pair_free(p); }
};
struct DrawingDeleter {
    void operator()(dgcf_drawing* d) const { dgcf_drawing_free(d); }
};
struct TraceDeleter {
    void operator()(dgcf_trace* t) const { dgcf_trace_free(t); }
};
using PairPtr = std::unique_ptr<dgcf_pair, PairDeleter>;
using DrawingPtr = std::unique_ptr<dgcf_drawing, DrawingDeleter>;
using TracePtr = std::unique_ptr<dgcf_trace, TraceDeleter>;

PairPtr load_pair(const std::string& path) {
    dgcf_pair* raw = nullptr;
    check(dgcf_pair_load(path.c_str(), &raw));
    return PairPtr(raw);
}

DrawingPtr load_drawing(const std::string& path, uint32_t expected_n) {
    dgcf_drawing* raw = nullptr;
    check(dgcf_drawing_load(path.c_str(), expected_n, &raw));
    return DrawingPtr(raw);
}

void save_drawing(const dgcf_drawing* drawing, const std::string& path) {
    check(dgcf_drawing_save(drawing, path.c_str()));
    std::printf("wrote %s\n", path.c_str());
}

std::vector<std::string> split_fields(const std::string& text) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(text.substr(start));
            return fields;
        }
        fields.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

uint32_t parse_u32(const std::string& field, const char* what) {
    try {
        size_t used = 0;
        unsigned long value = std::stoul(field, &used);
        if (used != field.size() || value > UINT32_MAX) {
            invalid(std::string("bad ") + what + ": " + field);
        }
        return static_cast<uint32_t>(value);
    } catch (const StatusError&) {
        throw;
    } catch (const std::exception&) {
        invalid(std::string("bad ") + what + ": " + field);
    }
}

double parse_density(const std::string& field, const char* what) {
    try {
        size_t used = 0;
        double value = std::stod(field, &used);
        if (used != field.size()) {
            invalid(std::string("bad ") + what + ": " + field);
        }
        return value;
    } catch (const StatusError&) {
        throw;
    } catch (const std::exception&) {
        invalid(std::string("bad ") + what + ": " + field);
    }
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

// ---- generate ----------------------------------------------------------

struct GenerateArgs {
    std::string kind;
    std::string out;
    uint64_t seed = 0;
    // cluster knobs (0 / -1 keep the library defaults)
    uint32_t base_vertices = 0;
    uint32_t min_cluster = 0;
    uint32_t max_cluster = 0;
    double intra_density = -1.0;
    int64_t inter_edges = -1;
    std::vector<std::string> merges;
    std::vector<std::string> splits;
    // distance knobs
    uint32_t vertices = 0;
    std::string backbone = "tree";
    int64_t shortcuts = -1;
    double diameter_ratio = -1.0;
    int64_t min_diameter = -1;
};

void run_generate(const GenerateArgs& args) {
    PairPtr pair;
    dgcf_pair* raw = nullptr;
    if (args.kind == "cluster") {
        dgcf_cluster_spec spec;
        dgcf_cluster_spec_init(&spec);
        if (args.base_vertices != 0) {
            spec.base_vertex_count = args.base_vertices;
        }
        if (args.min_cluster != 0) {
            spec.min_cluster_size = args.min_cluster;
        }
        if (args.max_cluster != 0) {
            spec.max_cluster_size = args.max_cluster;
        }
        if (args.intra_density >= 0.0) {
            spec.intra_density = args.intra_density;
        }
        if (args.inter_edges >= 0) {
            spec.inter_edge_count = static_cast<uint32_t>(args.inter_edges);
        }
        spec.seed = args.seed;
        std::vector<dgcf_cluster_event> events;
        for (const std::string& text : args.merges) {
            auto fields = split_fields(text);
            if (fields.size() != 2 && fields.size() != 3) {
                invalid("--merge wants a,b or a,b,density: " + text);
            }
            dgcf_cluster_event event{};
            event.kind = DGCF_EVENT_MERGE;
            event.cluster_a = parse_u32(fields[0], "merge cluster");
            event.cluster_b = parse_u32(fields[1], "merge cluster");
            event.target_density =
                fields.size() == 3 ? parse_density(fields[2], "merge density")
                                   : spec.intra_density;
            events.push_back(event);
        }
        for (const std::string& text : args.splits) {
            auto fields = split_fields(text);
            if (fields.size() != 1 && fields.size() != 2) {
                invalid("--split wants c or c,density: " + text);
            }
            dgcf_cluster_event event{};
            event.kind = DGCF_EVENT_SPLIT;
            event.cluster_a = parse_u32(fields[0], "split cluster");
            event.target_density =
                fields.size() == 2 ? parse_density(fields[1], "split density")
                                   : spec.intra_density * 0.55;
            events.push_back(event);
        }
        spec.events = events.empty() ? nullptr : events.data();
        spec.event_count = events.size();
        check(dgcf_generate_cluster_pair(&spec, &raw));
    } else {
        dgcf_distance_spec spec;
        dgcf_distance_spec_init(&spec);
        if (args.vertices != 0) {
            spec.vertex_count = args.vertices;
        }
        if (args.backbone == "tree") {
            spec.backbone = DGCF_BACKBONE_TREE;
        } else if (args.backbone == "path") {
            spec.backbone = DGCF_BACKBONE_PATH;
        } else {
            invalid("--backbone wants tree or path: " + args.backbone);
        }
        if (args.shortcuts >= 0) {
            spec.shortcut_count = static_cast<uint32_t>(args.shortcuts);
        }
        if (args.diameter_ratio >= 0.0) {
            spec.diameter_ratio = args.diameter_ratio;
        }
        if (args.min_diameter >= 0) {
            spec.min_diameter = static_cast<uint32_t>(args.min_diameter);
        }
        spec.seed = args.seed;
        check(dgcf_generate_distance_pair(&spec, &raw));
    }
    pair.reset(raw);
    check(dgcf_pair_save(pair.get(), args.out.c_str()));
    std::printf("wrote %s\n", args.out.c_str());
}

// ---- layout ------------------------------------------------------------

struct LayoutArgs {
    std::string dataset;
    std::string algo;
    std::string out;
    uint64_t seed = 0;
    uint32_t iterations = 0; // 0 keeps the algorithm default
    double tol = 0.0;        // 0 keeps the algorithm default
};

void run_layout(const LayoutArgs& args) {
    PairPtr pair = load_pair(args.dataset);
    DrawingPtr drawings[2];
    if (args.algo == "clusterfaithful") {
        dgcf_drawing* d1 = nullptr;
        dgcf_drawing* d2 = nullptr;
        check(dgcf_layout_cluster_faithful(pair.get(), args.seed, &d1, &d2));
        drawings[0].reset(d1);
        drawings[1].reset(d2);
    } else {
        // slice 2 runs on seed+1 so the drawings are independent
        for (int slice = 1; slice <= 2; ++slice) {
            uint64_t seed = args.seed + static_cast<uint64_t>(slice - 1);
            dgcf_drawing* d = nullptr;
            if (args.algo == "stressmaj") {
                check(dgcf_layout_stress_majorization(pair.get(), slice, seed,
                                                      args.iterations,
                                                      args.tol, &d));
            } else if (args.algo == "fr") {
                check(dgcf_layout_fruchterman_reingold(pair.get(), slice,
                                                       seed, args.iterations,
                                                       &d));
            } else {
                invalid("--algo wants stressmaj, fr, or clusterfaithful: " +
                        args.algo);
            }
            drawings[slice - 1].reset(d);
        }
    }
    save_drawing(drawings[0].get(), args.out + "_1.coords");
    save_drawing(drawings[1].get(), args.out + "_2.coords");
}

// ---- deform ------------------------------------------------------------

struct DeformArgs {
    std::string kind;
    std::string dataset;
    std::string coords;
    std::string out;
    uint32_t steps = 1;
    uint64_t seed = 0;
    double fraction = 0.075; // cluster: jitter radius as a bounding-box share
    double factor = 0.0;     // distance: 0 keeps the default (1.15)
    double subset = 0.0;     // distance: 0 keeps the default (1.0)
};

void run_deform(const DeformArgs& args) {
    PairPtr pair = load_pair(args.dataset);
    DrawingPtr current =
        load_drawing(args.coords, dgcf_pair_vertex_count(pair.get()));
    if (args.kind == "cluster") {
        for (uint32_t step = 0; step < args.steps; ++step) {
            dgcf_drawing* next = nullptr;
            check(dgcf_deform_cluster_step(current.get(), args.seed + step,
                                           args.fraction, &next));
            current.reset(next);
        }
    } else {
        // Deforms a drawing of slice 2; the stretch/shrink split comes from
        // the deterministic 50/50 rule on the command seed.
        size_t stretch_count = 0;
        size_t shrink_count = 0;
        dgcf_pair_edge_split_sizes(pair.get(), &stretch_count, &shrink_count);
        std::vector<uint32_t> stretch(2 * stretch_count);
        std::vector<uint32_t> shrink(2 * shrink_count);
        check(dgcf_pair_edge_split(pair.get(), args.seed, stretch.data(),
                                   shrink.data()));
        for (uint32_t step = 0; step < args.steps; ++step) {
            dgcf_drawing* next = nullptr;
            check(dgcf_deform_distance_step(
                current.get(), pair.get(), 2, stretch.data(), stretch_count,
                shrink.data(), shrink_count, args.seed + 1 + step,
                args.factor, args.subset, &next));
            current.reset(next);
        }
    }
    save_drawing(current.get(), args.out);
}

// ---- metric ------------------------------------------------------------

struct MetricArgs {
    std::string metric;
    std::string dataset;
    std::string coords1;
    std::string coords2;
    int slice = 1;
    std::string index = "ari";
    uint64_t seed = 0;
    std::optional<uint64_t> seed2;
};

void run_metric(const MetricArgs& args) {
    PairPtr pair = load_pair(args.dataset);
    uint32_t n = dgcf_pair_vertex_count(pair.get());
    int index = 0;
    if (args.index == "ari") {
        index = DGCF_INDEX_ARI;
    } else if (args.index == "fmi") {
        index = DGCF_INDEX_FMI;
    } else {
        invalid("--index wants ari or fmi: " + args.index);
    }
    double value = 0.0;
    if (args.metric == "cq" || args.metric == "stress") {
        if (args.coords1.empty()) {
            invalid("--coords1 is required for " + args.metric);
        }
        DrawingPtr d = load_drawing(args.coords1, n);
        if (args.metric == "cq") {
            check(dgcf_metric_cq(pair.get(), args.slice, d.get(), index,
                                 args.seed, &value));
        } else {
            check(dgcf_metric_stress(pair.get(), args.slice, d.get(),
                                     &value));
        }
    } else {
        if (args.coords1.empty() || args.coords2.empty()) {
            invalid("--coords1 and --coords2 are required for " +
                    args.metric);
        }
        DrawingPtr d1 = load_drawing(args.coords1, n);
        DrawingPtr d2 = load_drawing(args.coords2, n);
        if (args.metric == "ccq") {
            check(dgcf_metric_ccq(pair.get(), d1.get(), d2.get(), index,
                                  args.seed, args.seed2.value_or(args.seed),
                                  &value));
        } else if (args.metric == "dcq1") {
            check(dgcf_metric_dcq1(pair.get(), d1.get(), d2.get(), &value));
        } else if (args.metric == "dcq2") {
            check(dgcf_metric_dcq2(pair.get(), d1.get(), d2.get(), &value));
        } else {
            invalid("--metric wants ccq, dcq1, dcq2, cq, or stress: " +
                    args.metric);
        }
    }
    std::printf("%.17g\n", value);
}

// ---- experiment --------------------------------------------------------

struct ExperimentArgs {
    std::string which;
    std::string out;
    uint32_t datasets = 10;
    uint32_t steps = 10;
    uint64_t seed = 0;
    uint32_t threads = 1;
    bool emit_datasets = false;
    std::vector<std::string> dataset_files;
    std::vector<std::string> layouts;
    std::vector<std::string> imports;
};

void run_experiment(const ExperimentArgs& args) {
    std::filesystem::create_directories(args.out);
    dgcf_experiment_config config;
    dgcf_experiment_config_init(&config);
    config.dataset_count = args.datasets;
    config.steps = args.steps;
    config.seed = args.seed;
    config.threads = args.threads;
    std::string emit_dir = args.out + "/datasets";
    if (args.emit_datasets) {
        std::filesystem::create_directories(emit_dir);
        config.emit_dataset_dir = emit_dir.c_str();
    }

    std::vector<PairPtr> owners;
    std::vector<const dgcf_pair*> preloaded;
    std::vector<std::string> id_storage;
    std::vector<const char*> ids;
    for (const std::string& path : args.dataset_files) {
        owners.push_back(load_pair(path));
        preloaded.push_back(owners.back().get());
        id_storage.push_back(stem_of(path));
    }
    for (const std::string& id : id_storage) {
        ids.push_back(id.c_str());
    }

    std::vector<dgcf_comparison_layout> layouts;
    std::vector<std::string> name_storage;
    // Upper bound on pushes (2 per import, 2 default builtins); reserving
    // keeps the c_str pointers below stable.
    name_storage.reserve(2 * (args.layouts.size() + args.imports.size()) + 2);
    auto add_builtin = [&](const std::string& name) {
        dgcf_comparison_layout layout{};
        if (name == "stressmaj") {
            layout.builtin = DGCF_LAYOUT_STRESS_MAJORIZATION;
        } else if (name == "fr") {
            layout.builtin = DGCF_LAYOUT_FRUCHTERMAN_REINGOLD;
        } else if (name == "clusterfaithful") {
            layout.builtin = DGCF_LAYOUT_CLUSTER_FAITHFUL;
        } else {
            invalid("--layout wants stressmaj, fr, or clusterfaithful: " +
                    name);
        }
        name_storage.push_back(name);
        layout.name = name_storage.back().c_str();
        layouts.push_back(layout);
    };
    for (const std::string& name : args.layouts) {
        add_builtin(name);
    }
    for (const std::string& text : args.imports) {
        size_t eq = text.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
            invalid("--import wants name=pattern: " + text);
        }
        dgcf_comparison_layout layout{};
        layout.builtin = DGCF_LAYOUT_IMPORTED;
        name_storage.push_back(text.substr(0, eq));
        layout.name = name_storage.back().c_str();
        name_storage.push_back(text.substr(eq + 1));
        layout.import_pattern = name_storage.back().c_str();
        layouts.push_back(layout);
    }

    dgcf_trace* raw = nullptr;
    if (args.which == "ccq-val") {
        check(dgcf_run_ccq_validation(&config, preloaded.data(), ids.data(),
                                      preloaded.size(), &raw));
    } else if (args.which == "dcq-val") {
        check(dgcf_run_dcq_validation(&config, preloaded.data(), ids.data(),
                                      preloaded.size(), &raw));
    } else {
        bool cluster_kind = args.which == "ccq-cmp";
        if (!cluster_kind && args.which != "dcq-cmp") {
            invalid("--which wants ccq-val, dcq-val, ccq-cmp, or dcq-cmp: " +
                    args.which);
        }
        if (layouts.empty()) {
            add_builtin(cluster_kind ? "clusterfaithful" : "stressmaj");
            add_builtin("fr");
        }
        check(dgcf_run_layout_comparison(
            &config, cluster_kind ? DGCF_DATASET_CLUSTER : DGCF_DATASET_DISTANCE,
            layouts.data(), layouts.size(), preloaded.data(), ids.data(),
            preloaded.size(), &raw));
    }
    TracePtr trace(raw);

    std::string csv_path = args.out + "/results.csv";
    std::string svg_path = args.out + "/trend.svg";
    check(dgcf_trace_write_csv(trace.get(), csv_path.c_str()));
    std::printf("wrote %s\n", csv_path.c_str());
    check(dgcf_trace_render_svg(trace.get(), svg_path.c_str()));
    std::printf("wrote %s\n", svg_path.c_str());
}

int exit_code_for(dgcf_status status) {
    switch (status) {
    case DGCF_PARSE_ERROR:
    case DGCF_IO_ERROR:
    case DGCF_MISSING_COORDINATES:
        return 2;
    default:
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"change-faithfulness toolkit for dynamic graph drawings"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate =
        app.add_subcommand("generate", "generate a synthetic dataset");
    generate->add_option("--kind", gen.kind, "cluster or distance")
        ->required()
        ->check(CLI::IsMember({"cluster", "distance"}));
    generate->add_option("--out", gen.out, "output dataset path")->required();
    generate->add_option("--seed", gen.seed, "generator seed");
    generate->add_option("--base-vertices", gen.base_vertices,
                         "cluster: base graph size (clusters in slice 1)");
    generate->add_option("--min-cluster-size", gen.min_cluster,
                         "cluster: smallest cluster size");
    generate->add_option("--max-cluster-size", gen.max_cluster,
                         "cluster: largest cluster size");
    generate->add_option("--intra-density", gen.intra_density,
                         "cluster: intra-cluster edge density in (0,1]");
    generate->add_option("--inter-edges", gen.inter_edges,
                         "cluster: edges per base edge");
    generate->add_option("--merge", gen.merges,
                         "cluster: merge event a,b[,density] (repeatable; "
                         "merges apply before splits)");
    generate->add_option("--split", gen.splits,
                         "cluster: split event c[,density] (repeatable)");
    generate->add_option("--vertices", gen.vertices,
                         "distance: vertex count in [20,300]");
    generate->add_option("--backbone", gen.backbone,
                         "distance: tree or path");
    generate->add_option("--shortcuts", gen.shortcuts,
                         "distance: shortcut edges added in slice 2");
    generate->add_option("--diameter-ratio", gen.diameter_ratio,
                         "distance: required diameter(G2)/diameter(G1)");
    generate->add_option("--min-diameter", gen.min_diameter,
                         "distance: required diameter of slice 1");
    generate->callback([&] { run_generate(gen); });

    LayoutArgs lay;
    CLI::App* layout = app.add_subcommand(
        "layout", "draw both slices; writes <out>_1.coords, <out>_2.coords");
    layout->add_option("--dataset", lay.dataset, "dataset path")->required();
    layout->add_option("--algo", lay.algo,
                       "stressmaj, fr, or clusterfaithful")
        ->required()
        ->check(CLI::IsMember({"stressmaj", "fr", "clusterfaithful"}));
    layout->add_option("--out", lay.out, "output path prefix")->required();
    layout->add_option("--seed", lay.seed, "layout seed");
    layout->add_option("--iterations", lay.iterations,
                       "iteration cap (0 = algorithm default)");
    layout->add_option("--tol", lay.tol,
                       "stressmaj convergence tolerance (0 = default)");
    layout->callback([&] { run_layout(lay); });

    DeformArgs def;
    CLI::App* deform = app.add_subcommand(
        "deform", "apply cumulative deformation steps to a drawing");
    deform->add_option("--kind", def.kind, "cluster or distance")
        ->required()
        ->check(CLI::IsMember({"cluster", "distance"}));
    deform->add_option("--dataset", def.dataset, "dataset path")->required();
    deform->add_option("--coords", def.coords,
                       "input drawing (slice 2 for distance)")
        ->required();
    deform->add_option("--out", def.out, "output coordinate path")
        ->required();
    deform->add_option("--steps", def.steps, "number of cumulative steps");
    deform->add_option("--seed", def.seed,
                       "base seed; step k uses seed+k (distance: seed+1+k, "
                       "seed itself picks the stretch/shrink split)");
    deform->add_option("--fraction", def.fraction,
                       "cluster: jitter radius as a bounding-box fraction");
    deform->add_option("--factor", def.factor,
                       "distance: stretch multiplier (0 = default 1.15)");
    deform->add_option("--subset", def.subset,
                       "distance: fraction of each edge set to move per step "
                       "(0 = default 1.0)");
    deform->callback([&] { run_deform(def); });

    MetricArgs met;
    CLI::App* metric =
        app.add_subcommand("metric", "evaluate a faithfulness metric");
    metric->add_option("--metric", met.metric,
                       "ccq, dcq1, dcq2, cq, or stress")
        ->required()
        ->check(CLI::IsMember({"ccq", "dcq1", "dcq2", "cq", "stress"}));
    metric->add_option("--dataset", met.dataset, "dataset path")->required();
    metric->add_option("--coords1", met.coords1,
                       "drawing of slice 1 (or of --slice for cq/stress)");
    metric->add_option("--coords2", met.coords2, "drawing of slice 2");
    metric->add_option("--slice", met.slice, "slice for cq/stress (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    metric->add_option("--index", met.index, "ari or fmi (cq/ccq)")
        ->check(CLI::IsMember({"ari", "fmi"}));
    metric->add_option("--seed", met.seed, "k-means seed (cq/ccq)");
    metric->add_option("--seed2", met.seed2,
                       "k-means seed for the second drawing (default: --seed)");
    metric->callback([&] { run_metric(met); });

    ExperimentArgs exp;
    CLI::App* experiment = app.add_subcommand(
        "experiment", "run a validation or comparison; writes results.csv "
                      "and trend.svg under --out");
    experiment->add_option("--which", exp.which,
                           "ccq-val, dcq-val, ccq-cmp, or dcq-cmp")
        ->required()
        ->check(CLI::IsMember({"ccq-val", "dcq-val", "ccq-cmp", "dcq-cmp"}));
    experiment->add_option("--out", exp.out, "output directory")->required();
    experiment->add_option("--datasets", exp.datasets,
                           "generated dataset count");
    experiment->add_option("--steps", exp.steps, "deformation steps");
    experiment->add_option("--seed", exp.seed, "master seed");
    experiment->add_option("--threads", exp.threads,
                           "worker threads (0 = hardware count)");
    experiment->add_flag("--emit-datasets", exp.emit_datasets,
                         "save generated datasets under <out>/datasets");
    experiment->add_option("--dataset", exp.dataset_files,
                           "preloaded dataset path (repeatable; replaces "
                           "generation)");
    experiment->add_option("--layout", exp.layouts,
                           "comparison: built-in layout (repeatable)");
    experiment->add_option("--import", exp.imports,
                           "comparison: name=pattern with {dataset} and "
                           "{slice} placeholders (repeatable)");
    experiment->callback([&] { run_experiment(exp); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const StatusError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e.status);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
