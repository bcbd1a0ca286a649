/* dgcf: change-faithfulness metrics for dynamic graph drawings.
 *
 * C interface to the core library. All functions returning dgcf_status
 * report DGCF_OK on success; on failure they leave outputs untouched and
 * store a message retrievable with dgcf_last_error() on the same thread.
 * Objects returned through out-parameters are owned by the caller and
 * released with the matching *_free function.
 */
#ifndef DGCF_H
#define DGCF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dgcf_status {
    DGCF_OK = 0,
    DGCF_INVALID_ARGUMENT = 1,
    DGCF_SIZE_MISMATCH = 2,
    DGCF_DISCONNECTED_GRAPH = 3,
    DGCF_DEGENERATE_DRAWING = 4,
    DGCF_TOO_FEW_POINTS = 5,
    DGCF_INFEASIBLE_SPEC = 6,
    DGCF_LAYOUT_NOT_FAITHFUL = 7,
    DGCF_INVALID_EDGE_SET = 8,
    DGCF_MISSING_COORDINATES = 9,
    DGCF_PARSE_ERROR = 10,
    DGCF_IO_ERROR = 11,
    DGCF_INTERNAL_ERROR = 12,
} dgcf_status;

/* Message for the most recent failure on the calling thread. Never NULL;
 * empty until the first failure. */
const char* dgcf_last_error(void);
const char* dgcf_status_name(dgcf_status status);

/* Two graph snapshots over a shared vertex set, with optional ground-truth
 * clusterings. */
typedef struct dgcf_pair dgcf_pair;
/* 2D vertex coordinates for one snapshot. */
typedef struct dgcf_drawing dgcf_drawing;
/* Per-dataset, per-step metric records produced by the experiment runs. */
typedef struct dgcf_trace dgcf_trace;

void dgcf_pair_free(dgcf_pair* pair);
void dgcf_drawing_free(dgcf_drawing* drawing);
void dgcf_trace_free(dgcf_trace* trace);

/* ---- graph pairs ------------------------------------------------------ */

/* Edge arrays are flat [u0, v0, u1, v1, ...] with edge_count pairs.
 * clusters1/clusters2 are NULL or vertex_count labels forming a partition
 * with every label in [0, max] used. */
dgcf_status dgcf_pair_create(uint32_t vertex_count, const uint32_t* edges1,
                             size_t edge_count1, const uint32_t* edges2,
                             size_t edge_count2, const uint32_t* clusters1,
                             const uint32_t* clusters2, dgcf_pair** out);

dgcf_status dgcf_pair_load(const char* path, dgcf_pair** out);
dgcf_status dgcf_pair_save(const dgcf_pair* pair, const char* path);

uint32_t dgcf_pair_vertex_count(const dgcf_pair* pair);
/* slice is 1 or 2 throughout this interface */
size_t dgcf_pair_edge_count(const dgcf_pair* pair, int slice);
/* fills edges as flat pairs; capacity counts uint32_t slots */
dgcf_status dgcf_pair_copy_edges(const dgcf_pair* pair, int slice,
                                 uint32_t* edges, size_t capacity);
int dgcf_pair_has_clusterings(const dgcf_pair* pair);
dgcf_status dgcf_pair_copy_clusters(const dgcf_pair* pair, int slice,
                                    uint32_t* labels, size_t capacity);

/* ---- generators -------------------------------------------------------- */

typedef enum dgcf_event_kind {
    DGCF_EVENT_MERGE = 0,
    DGCF_EVENT_SPLIT = 1,
} dgcf_event_kind;

typedef struct dgcf_cluster_event {
    int kind;           /* dgcf_event_kind */
    uint32_t cluster_a; /* merge: first cluster; split: the cluster */
    uint32_t cluster_b; /* merge only */
    double target_density;
} dgcf_cluster_event;

typedef struct dgcf_cluster_spec {
    uint32_t base_vertex_count;
    uint32_t min_cluster_size;
    uint32_t max_cluster_size;
    double intra_density;
    uint32_t inter_edge_count;
    const dgcf_cluster_event* events;
    size_t event_count;
    uint64_t seed;
} dgcf_cluster_spec;

typedef enum dgcf_backbone {
    DGCF_BACKBONE_TREE = 0,
    DGCF_BACKBONE_PATH = 1,
} dgcf_backbone;

typedef struct dgcf_distance_spec {
    uint32_t vertex_count;
    int backbone; /* dgcf_backbone */
    uint32_t shortcut_count;
    double diameter_ratio;
    uint32_t min_diameter;
    uint64_t seed;
} dgcf_distance_spec;

/* Fill a spec with the documented defaults. */
void dgcf_cluster_spec_init(dgcf_cluster_spec* spec);
void dgcf_distance_spec_init(dgcf_distance_spec* spec);

dgcf_status dgcf_generate_cluster_pair(const dgcf_cluster_spec* spec,
                                       dgcf_pair** out);
dgcf_status dgcf_generate_distance_pair(const dgcf_distance_spec* spec,
                                        dgcf_pair** out);

/* ---- drawings ---------------------------------------------------------- */

/* xy is flat [x0, y0, x1, y1, ...] with vertex_count points. */
dgcf_status dgcf_drawing_create(const double* xy, uint32_t vertex_count,
                                dgcf_drawing** out);
uint32_t dgcf_drawing_vertex_count(const dgcf_drawing* drawing);
/* capacity counts double slots (2 per vertex) */
dgcf_status dgcf_drawing_copy_positions(const dgcf_drawing* drawing,
                                        double* xy, size_t capacity);
dgcf_status dgcf_drawing_load(const char* path, uint32_t expected_n,
                              dgcf_drawing** out);
dgcf_status dgcf_drawing_save(const dgcf_drawing* drawing, const char* path);

/* ---- layouts ----------------------------------------------------------- */

/* max_iter 0 and tol 0 pick the defaults (300, 1e-6). */
dgcf_status dgcf_layout_stress_majorization(const dgcf_pair* pair, int slice,
                                            uint64_t seed, uint32_t max_iter,
                                            double tol, dgcf_drawing** out);
/* iterations 0 picks the default (200). */
dgcf_status dgcf_layout_fruchterman_reingold(const dgcf_pair* pair, int slice,
                                             uint64_t seed,
                                             uint32_t iterations,
                                             dgcf_drawing** out);
/* Requires both clusterings; fails with DGCF_LAYOUT_NOT_FAITHFUL if k-means
 * cannot recover the ground truth after internal retries. */
dgcf_status dgcf_layout_cluster_faithful(const dgcf_pair* pair, uint64_t seed,
                                         dgcf_drawing** out1,
                                         dgcf_drawing** out2);

/* ---- deformations ------------------------------------------------------ */

dgcf_status dgcf_deform_cluster_step(const dgcf_drawing* drawing,
                                     uint64_t seed, double fraction,
                                     dgcf_drawing** out);

/* stretch/shrink edges are flat pairs and must be disjoint subsets of the
 * chosen slice's edges. factor 0 picks the default (1.15); subset_fraction
 * 0 picks the default (1.0 = deform every listed edge). */
dgcf_status dgcf_deform_distance_step(
    const dgcf_drawing* drawing, const dgcf_pair* pair, int slice,
    const uint32_t* stretch_edges, size_t stretch_count,
    const uint32_t* shrink_edges, size_t shrink_count, uint64_t seed,
    double factor, double subset_fraction, dgcf_drawing** out);

/* Deterministic 50/50 split of slice 2's edges, the default deformation
 * input. Both arrays need capacity for the counts reported by
 * dgcf_pair_edge_split_sizes. */
void dgcf_pair_edge_split_sizes(const dgcf_pair* pair, size_t* stretch_count,
                                size_t* shrink_count);
dgcf_status dgcf_pair_edge_split(const dgcf_pair* pair, uint64_t seed,
                                 uint32_t* stretch_edges,
                                 uint32_t* shrink_edges);

/* ---- metrics ----------------------------------------------------------- */

typedef enum dgcf_cluster_metric {
    DGCF_INDEX_ARI = 0,
    DGCF_INDEX_FMI = 1,
} dgcf_cluster_metric;

/* Agreement between the slice's ground-truth clustering and a k-means
 * clustering of the drawing (k from the ground truth). */
dgcf_status dgcf_metric_cq(const dgcf_pair* pair, int slice,
                           const dgcf_drawing* drawing, int index,
                           uint64_t seed, double* out);
/* Change faithfulness of the clustering structure across the two drawings. */
dgcf_status dgcf_metric_ccq(const dgcf_pair* pair, const dgcf_drawing* d1,
                            const dgcf_drawing* d2, int index, uint64_t seed1,
                            uint64_t seed2, double* out);
/* Distance-change faithfulness, absolute variant. */
dgcf_status dgcf_metric_dcq1(const dgcf_pair* pair, const dgcf_drawing* d1,
                             const dgcf_drawing* d2, double* out);
/* Distance-change faithfulness, diameter/spread-normalized variant. */
dgcf_status dgcf_metric_dcq2(const dgcf_pair* pair, const dgcf_drawing* d1,
                             const dgcf_drawing* d2, double* out);
/* Normalized stress of one slice's drawing at the optimal scale. */
dgcf_status dgcf_metric_stress(const dgcf_pair* pair, int slice,
                               const dgcf_drawing* drawing, double* out);

/* ---- experiments ------------------------------------------------------- */

typedef struct dgcf_experiment_config {
    uint32_t dataset_count; /* generated datasets when none are supplied */
    uint32_t steps;         /* deformation steps; records cover 0..steps */
    uint64_t seed;
    uint32_t threads;             /* 0 = hardware thread count */
    const char* emit_dataset_dir; /* NULL, or directory for generated sets */
} dgcf_experiment_config;

void dgcf_experiment_config_init(dgcf_experiment_config* config);

/* datasets/ids may be NULL with dataset_count_in 0 to generate defaults. */
dgcf_status dgcf_run_ccq_validation(const dgcf_experiment_config* config,
                                    const dgcf_pair* const* datasets,
                                    const char* const* ids,
                                    size_t dataset_count_in,
                                    dgcf_trace** out);
dgcf_status dgcf_run_dcq_validation(const dgcf_experiment_config* config,
                                    const dgcf_pair* const* datasets,
                                    const char* const* ids,
                                    size_t dataset_count_in,
                                    dgcf_trace** out);

typedef enum dgcf_layout_choice {
    DGCF_LAYOUT_IMPORTED = -1,
    DGCF_LAYOUT_STRESS_MAJORIZATION = 0,
    DGCF_LAYOUT_FRUCHTERMAN_REINGOLD = 1,
    DGCF_LAYOUT_CLUSTER_FAITHFUL = 2,
} dgcf_layout_choice;

typedef struct dgcf_comparison_layout {
    const char* name;
    int builtin; /* dgcf_layout_choice */
    /* for DGCF_LAYOUT_IMPORTED: coordinate path pattern containing
     * {dataset} and {slice} placeholders */
    const char* import_pattern;
} dgcf_comparison_layout;

typedef enum dgcf_dataset_kind {
    DGCF_DATASET_CLUSTER = 0,
    DGCF_DATASET_DISTANCE = 1,
} dgcf_dataset_kind;

dgcf_status dgcf_run_layout_comparison(
    const dgcf_experiment_config* config, int kind,
    const dgcf_comparison_layout* layouts, size_t layout_count,
    const dgcf_pair* const* datasets, const char* const* ids,
    size_t dataset_count_in, dgcf_trace** out);

/* ---- traces ------------------------------------------------------------ */

size_t dgcf_trace_dataset_count(const dgcf_trace* trace);
/* Borrowed pointer, valid while the trace lives. */
const char* dgcf_trace_dataset_id(const dgcf_trace* trace, size_t dataset);
size_t dgcf_trace_step_count(const dgcf_trace* trace, size_t dataset);
size_t dgcf_trace_metric_count(const dgcf_trace* trace, size_t dataset,
                               size_t step);
const char* dgcf_trace_metric_name(const dgcf_trace* trace, size_t dataset,
                                   size_t step, size_t metric);
dgcf_status dgcf_trace_value(const dgcf_trace* trace, size_t dataset,
                             size_t step, const char* metric, double* out);
/* Mean of a metric across all datasets at one step. */
dgcf_status dgcf_trace_aggregate(const dgcf_trace* trace, size_t step,
                                 const char* metric, double* out);

dgcf_status dgcf_trace_write_csv(const dgcf_trace* trace, const char* path);
dgcf_status dgcf_trace_read_csv(const char* path, dgcf_trace** out);
dgcf_status dgcf_trace_render_svg(const dgcf_trace* trace, const char* path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DGCF_H */
