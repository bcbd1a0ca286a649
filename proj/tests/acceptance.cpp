// Acceptance checks, one per numbered criterion. `acceptance` runs all of
// them; `acceptance <n>` runs one. Each prints a single [PASS]/[FAIL] line
// and the exit code is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "change_metrics.hpp"
#include "cluster_compare.hpp"
#include "experiments.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io_util.hpp"
#include "layouts.hpp"
#include "oracles.hpp"
#include "results_io.hpp"
#include "rng.hpp"
#include "trace.hpp"

using namespace dgcf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format(const char* fmt, ...) {
    char buffer[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buffer, sizeof(buffer), fmt, args);
    va_end(args);
    return buffer;
}

Drawing transformed(const Drawing& drawing, double angle, double scale,
                    bool reflect, double tx, double ty) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    std::vector<Point> points;
    points.reserve(drawing.positions.size());
    for (const Point& p : drawing.positions) {
        const double x = reflect ? -p.x : p.x;
        points.push_back(Point{scale * (c * x - s * p.y) + tx,
                               scale * (s * x + c * p.y) + ty});
    }
    return make_drawing(std::move(points));
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name) {
        path = std::filesystem::temp_directory_path() / name;
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

// criterion 1: ARI/FMI match a brute-force pair-enumeration oracle on 200
// random partition pairs with n <= 12, within 1e-12, in under 5 seconds.
bool criterion_1(std::string& detail) {
    const auto start = Clock::now();
    Rng rng(314159);
    double max_err = 0.0;
    for (int round = 0; round < 200; ++round) {
        const uint32_t n = 2 + static_cast<uint32_t>(rng.next_index(11));
        const Clustering a = oracle::random_partition(rng, n, n);
        const Clustering b = oracle::random_partition(rng, n, n);
        max_err = std::max(
            max_err, std::abs(cluster_index(a, b, ClusterIndex::Ari) -
                              oracle::ari(a, b)));
        max_err = std::max(
            max_err, std::abs(cluster_index(a, b, ClusterIndex::Fmi) -
                              oracle::fmi(a, b)));
    }
    const double secs = seconds_since(start);
    detail = format("ari/fmi vs pair-count oracle on 200 random pairs, "
                    "max err %.2e, %.2f s",
                    max_err, secs);
    return max_err <= 1e-12 && secs < 5.0;
}

// criterion 2: ccq is exactly 1 whenever the ground-truth change equals the
// geometric change (100 random partition pairs), and the validation
// pipeline reports ccq_ari = ccq_fmi = 1.0 at step 0 on all 10 generated
// datasets.
bool criterion_2(std::string& detail) {
    Rng rng(271828);
    int exact = 0;
    for (int round = 0; round < 100; ++round) {
        const uint32_t n = 2 + static_cast<uint32_t>(rng.next_index(11));
        ClusterChangeInput input;
        input.truth1 = oracle::random_partition(rng, n, n);
        input.truth2 = oracle::random_partition(rng, n, n);
        input.geo1 = input.truth1;
        input.geo2 = input.truth2;
        if (ccq(input, ClusterIndex::Ari) == 1.0 &&
            ccq(input, ClusterIndex::Fmi) == 1.0) {
            ++exact;
        }
    }

    ExperimentConfig config;
    config.dataset_count = 10;
    config.steps = 0;
    config.seed = 0;
    config.threads = 4;
    const ExperimentTrace trace = run_ccq_validation(config);
    int clean = 0;
    for (const DatasetTrace& ds : trace.datasets) {
        if (ds.per_step.at(0).metrics.at("ccq_ari") == 1.0 &&
            ds.per_step.at(0).metrics.at("ccq_fmi") == 1.0) {
            ++clean;
        }
    }
    detail = format("ccq == 1.0 on %d/100 equal-change inputs; step-0 "
                    "ccq_ari = ccq_fmi = 1.0 on %d/%zu pipeline datasets",
                    exact, clean, trace.datasets.size());
    return exact == 100 && trace.datasets.size() == 10 && clean == 10;
}

// criterion 3: over 10 generated cluster datasets and 10 deformation steps,
// Spearman(step, mean ccq) <= -0.9 for both indices, and the step-10 mean
// ccq_ari does not exceed the step-10 mean ccq_fmi. Under 5 minutes.
bool criterion_3(std::string& detail) {
    const auto start = Clock::now();
    ExperimentConfig config;
    config.dataset_count = 10;
    config.steps = 10;
    config.seed = 0;
    config.threads = 4;
    const std::vector<StepRecord> means =
        aggregate_means(run_ccq_validation(config));

    std::vector<double> steps;
    std::vector<double> ari;
    std::vector<double> fmi;
    for (const StepRecord& record : means) {
        steps.push_back(record.step);
        ari.push_back(record.metrics.at("ccq_ari"));
        fmi.push_back(record.metrics.at("ccq_fmi"));
    }
    const double rho_ari = spearman(steps, ari);
    const double rho_fmi = spearman(steps, fmi);
    const double secs = seconds_since(start);
    detail = format("spearman ari %.3f, fmi %.3f; step-10 means ari %.3f "
                    "vs fmi %.3f; %.1f s",
                    rho_ari, rho_fmi, ari.back(), fmi.back(), secs);
    return means.size() == 11 && rho_ari <= -0.9 && rho_fmi <= -0.9 &&
           ari.back() <= fmi.back() && secs < 300.0;
}

// criterion 4: over 10 generated distance datasets, Spearman(step, mean
// dcq1) <= -0.9; the total dcq1 drop strictly exceeds the total dcq2 drop,
// and the dcq2 drop lies in [0.02, 0.3]. Under 5 minutes.
bool criterion_4(std::string& detail) {
    const auto start = Clock::now();
    ExperimentConfig config;
    config.dataset_count = 10;
    config.steps = 10;
    config.seed = 0;
    config.threads = 4;
    const std::vector<StepRecord> means =
        aggregate_means(run_dcq_validation(config));

    std::vector<double> steps;
    std::vector<double> dcq1_means;
    for (const StepRecord& record : means) {
        steps.push_back(record.step);
        dcq1_means.push_back(record.metrics.at("dcq1"));
    }
    const double rho = spearman(steps, dcq1_means);
    const double drop1 =
        means.front().metrics.at("dcq1") - means.back().metrics.at("dcq1");
    const double drop2 =
        means.front().metrics.at("dcq2") - means.back().metrics.at("dcq2");
    const double secs = seconds_since(start);
    detail = format("spearman dcq1 %.3f; drops dcq1 %.4f > dcq2 %.4f, "
                    "dcq2 in [0.02, 0.3]; %.1f s",
                    rho, drop1, drop2, secs);
    return means.size() == 11 && rho <= -0.9 && drop1 > drop2 &&
           drop2 >= 0.02 && drop2 <= 0.3 && secs < 300.0;
}

// criterion 5: on 10 generated distance datasets, stress majorization
// attains strictly lower mean stress and strictly higher mean dcq1 than
// Fruchterman-Reingold. Under 5 minutes.
bool criterion_5(std::string& detail) {
    const auto start = Clock::now();
    ExperimentConfig config;
    config.dataset_count = 10;
    config.seed = 0;
    config.threads = 4;
    ComparisonLayout majorization;
    majorization.name = "stressmaj";
    majorization.builtin = LayoutChoice::StressMajorization;
    ComparisonLayout fr;
    fr.name = "fr";
    fr.builtin = LayoutChoice::FruchtermanReingold;
    const ExperimentTrace trace = run_layout_comparison(
        config, DatasetKind::Distance, {majorization, fr});

    std::map<std::string, double> stress_sum;
    std::map<std::string, double> dcq1_sum;
    std::map<std::string, int> count;
    for (const DatasetTrace& ds : trace.datasets) {
        const std::string layout =
            ds.dataset_id.substr(0, ds.dataset_id.find('/'));
        const MetricReport& metrics = ds.per_step.at(0).metrics;
        stress_sum[layout] +=
            (metrics.at("stress_1") + metrics.at("stress_2")) / 2.0;
        dcq1_sum[layout] += metrics.at("dcq1");
        count[layout] += 1;
    }
    const double sm_stress = stress_sum["stressmaj"] / count["stressmaj"];
    const double fr_stress = stress_sum["fr"] / count["fr"];
    const double sm_dcq1 = dcq1_sum["stressmaj"] / count["stressmaj"];
    const double fr_dcq1 = dcq1_sum["fr"] / count["fr"];
    const double secs = seconds_since(start);
    detail = format("mean stress %.4f < %.4f and mean dcq1 %.4f > %.4f "
                    "(stressmaj vs fr, %d datasets each); %.1f s",
                    sm_stress, fr_stress, sm_dcq1, fr_dcq1,
                    count["stressmaj"], secs);
    return count["stressmaj"] == 10 && count["fr"] == 10 &&
           sm_stress < fr_stress && sm_dcq1 > fr_dcq1 && secs < 300.0;
}

// criterion 6: dcq2 is unchanged (within 1e-9) under independent similarity
// transforms of either drawing; dcq1 is unchanged under a shared rigid
// similarity transform of both drawings; an identical pair with identical
// drawings scores exactly 1 on both.
bool criterion_6(std::string& detail) {
    DistanceGenSpec spec;
    spec.vertex_count = 30;
    spec.backbone = Backbone::Path;
    spec.shortcut_count = 5;
    spec.seed = 9;
    const DynamicPair pair = gen_distance_pair(spec);
    const Drawing d1 = layout_stress_majorization(pair.slice1, 101);
    const Drawing d2 = layout_stress_majorization(pair.slice2, 102);

    const double base1 = dcq1(pair, d1, d2);
    const double base2 = dcq2(pair, d1, d2);

    const Drawing t1 = transformed(d1, 0.9, 3.7, false, 4.0, -2.0);
    const Drawing t2 = transformed(d2, -1.3, 0.25, true, -8.0, 5.0);
    double max_dcq2_delta = 0.0;
    max_dcq2_delta = std::max(max_dcq2_delta,
                              std::abs(dcq2(pair, t1, d2) - base2));
    max_dcq2_delta = std::max(max_dcq2_delta,
                              std::abs(dcq2(pair, d1, t2) - base2));
    max_dcq2_delta = std::max(max_dcq2_delta,
                              std::abs(dcq2(pair, t1, t2) - base2));

    // dcq1 compares drawn lengths against the pooled edge length, so the
    // shared transform preserves scale: rotation, reflection, translation.
    const Drawing s1 = transformed(d1, 2.1, 1.0, true, 3.0, 11.0);
    const Drawing s2 = transformed(d2, 2.1, 1.0, true, 3.0, 11.0);
    const double dcq1_delta = std::abs(dcq1(pair, s1, s2) - base1);

    const DynamicPair frozen =
        make_pair(pair.slice1, pair.slice1, std::nullopt, std::nullopt);
    const double same1 = dcq1(frozen, d1, d1);
    const double same2 = dcq2(frozen, d1, d1);

    detail = format("dcq2 max delta %.2e, dcq1 shared-transform delta "
                    "%.2e, identical scores %g/%g",
                    max_dcq2_delta, dcq1_delta, same1, same2);
    return max_dcq2_delta < 1e-9 && dcq1_delta < 1e-9 && same1 == 1.0 &&
           same2 == 1.0;
}

// criterion 7: the stress-majorization stress trace never increases, on 20
// random connected graphs with n <= 100, at every iteration, within 1e-12.
bool criterion_7(std::string& detail) {
    Rng rng(424242);
    int graphs_checked = 0;
    size_t iterations_checked = 0;
    double worst_rise = 0.0;
    for (int round = 0; round < 20; ++round) {
        const uint32_t n = 5 + static_cast<uint32_t>(rng.next_index(96));
        const uint32_t extra = static_cast<uint32_t>(rng.next_index(n));
        const TimeSlice slice = oracle::random_connected_slice(rng, n, extra);
        std::vector<double> trace;
        layout_stress_majorization(slice, 1000 + round, {}, &trace);
        for (size_t i = 1; i < trace.size(); ++i) {
            worst_rise = std::max(worst_rise, trace[i] - trace[i - 1]);
            ++iterations_checked;
        }
        ++graphs_checked;
    }
    detail = format("%d graphs, %zu iterations, worst stress rise %.3e",
                    graphs_checked, iterations_checked, worst_rise);
    return graphs_checked == 20 && iterations_checked > 0 &&
           worst_rise <= 1e-12;
}

// criterion 8: rerunning every pipeline with the same master seed yields
// byte-identical CSV output, including under different worker counts.
bool criterion_8(std::string& detail) {
    TempDir dir("dgcf-acceptance-determinism");
    auto csv_of = [&](const ExperimentTrace& trace, const std::string& name) {
        const std::string path = dir.file(name);
        write_results_csv(trace, path);
        return read_text_file(path);
    };

    ExperimentConfig config;
    config.dataset_count = 10;
    config.steps = 10;
    config.seed = 0;

    config.threads = 1;
    const std::string ccq_serial = csv_of(run_ccq_validation(config), "c1");
    config.threads = 4;
    const std::string ccq_wide = csv_of(run_ccq_validation(config), "c4");
    const std::string ccq_again = csv_of(run_ccq_validation(config), "c4b");

    config.threads = 1;
    const std::string dcq_serial = csv_of(run_dcq_validation(config), "d1");
    config.threads = 4;
    const std::string dcq_wide = csv_of(run_dcq_validation(config), "d4");

    ComparisonLayout majorization;
    majorization.name = "stressmaj";
    majorization.builtin = LayoutChoice::StressMajorization;
    ComparisonLayout fr;
    fr.name = "fr";
    fr.builtin = LayoutChoice::FruchtermanReingold;
    config.threads = 1;
    const std::string cmp_serial = csv_of(
        run_layout_comparison(config, DatasetKind::Distance,
                              {majorization, fr}),
        "m1");
    config.threads = 4;
    const std::string cmp_wide = csv_of(
        run_layout_comparison(config, DatasetKind::Distance,
                              {majorization, fr}),
        "m4");

    const bool ccq_ok = ccq_serial == ccq_wide && ccq_wide == ccq_again;
    const bool dcq_ok = dcq_serial == dcq_wide;
    const bool cmp_ok = cmp_serial == cmp_wide;
    detail = format("byte-identical csv across reruns and worker counts: "
                    "ccq %s, dcq %s, comparison %s",
                    ccq_ok ? "yes" : "NO", dcq_ok ? "yes" : "NO",
                    cmp_ok ? "yes" : "NO");
    return ccq_ok && dcq_ok && cmp_ok;
}

bool run_criterion(int number, std::string& detail) {
    switch (number) {
    case 1:
        return criterion_1(detail);
    case 2:
        return criterion_2(detail);
    case 3:
        return criterion_3(detail);
    case 4:
        return criterion_4(detail);
    case 5:
        return criterion_5(detail);
    case 6:
        return criterion_6(detail);
    case 7:
        return criterion_7(detail);
    case 8:
        return criterion_8(detail);
    default:
        detail = "unknown criterion";
        return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    if (selected.empty()) {
        selected = {1, 2, 3, 4, 5, 6, 7, 8};
    }

    int failures = 0;
    for (int number : selected) {
        std::string detail;
        bool ok = false;
        try {
            ok = run_criterion(number, detail);
        } catch (const std::exception& e) {
            detail = format("raised: %s", e.what());
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) {
            ++failures;
        }
    }
    return failures;
}
