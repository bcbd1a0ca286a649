#include "layouts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "cluster_compare.hpp"
#include "rng.hpp"

namespace dgcf {

namespace {

// sum over pairs of w_ij * (d_ij - delta_ij)^2 with w = delta^-2
double raw_weighted_stress(const DistanceMatrix& delta,
                           const Eigen::MatrixXd& x) {
    double total = 0.0;
    for (uint32_t i = 0; i < delta.n; ++i) {
        for (uint32_t j = i + 1; j < delta.n; ++j) {
            double dx = x(i, 0) - x(j, 0);
            double dy = x(i, 1) - x(j, 1);
            double d = std::hypot(dx, dy);
            double dl = delta.at(i, j);
            double r = d - dl;
            total += r * r / (dl * dl);
        }
    }
    return total;
}

Drawing to_drawing(const Eigen::MatrixXd& x) {
    std::vector<Point> positions(x.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        positions[i] = Point{x(i, 0), x(i, 1)};
    }
    return make_drawing(std::move(positions));
}

} // namespace

Drawing layout_stress_majorization(const TimeSlice& slice, uint64_t seed,
                                   const SmacofOptions& options,
                                   std::vector<double>* stress_trace) {
    if (slice.vertex_count == 0) {
        raise(ErrorCode::InvalidArgument, "cannot lay out an empty slice");
    }
    if (stress_trace != nullptr) {
        stress_trace->clear();
    }
    const auto n = static_cast<Eigen::Index>(slice.vertex_count);
    Rng rng(seed);
    if (n == 1) {
        return make_drawing({Point{0.0, 0.0}});
    }

    DistanceMatrix delta = all_pairs_graph_distance(slice);
    double side = std::sqrt(static_cast<double>(n));
    Eigen::MatrixXd x(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        x(i, 0) = rng.uniform(0.0, side);
        x(i, 1) = rng.uniform(0.0, side);
    }

    // scale the start to its own optimum so the majorization guarantee
    // carries over to optimally-scaled stress
    double sw_sd = 0.0;
    double sw_ss = 0.0;
    for (uint32_t i = 0; i < slice.vertex_count; ++i) {
        for (uint32_t j = i + 1; j < slice.vertex_count; ++j) {
            double d = std::hypot(x(i, 0) - x(j, 0), x(i, 1) - x(j, 1));
            double dl = delta.at(i, j);
            sw_sd += d / dl;
            sw_ss += d * d / (dl * dl);
        }
    }
    if (sw_ss > 0.0) {
        x *= sw_sd / sw_ss;
    }

    // V + ones/n is positive definite and acts as V on centered columns;
    // B(x) * x has centered columns, so one factorization serves every step
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            double dl = delta.at(static_cast<uint32_t>(i),
                                 static_cast<uint32_t>(j));
            double w = 1.0 / (dl * dl);
            v(i, j) -= w;
            v(i, i) += w;
        }
    }
    v.array() += 1.0 / static_cast<double>(n);
    Eigen::LLT<Eigen::MatrixXd> solver(v);
    if (solver.info() != Eigen::Success) {
        raise(ErrorCode::InvalidArgument,
              "stress system factorization failed");
    }

    double prev = raw_weighted_stress(delta, x);
    if (stress_trace != nullptr) {
        stress_trace->push_back(prev);
    }
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (uint32_t iter = 0; iter < options.max_iter; ++iter) {
        b.setZero();
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i + 1; j < n; ++j) {
                double d = std::hypot(x(i, 0) - x(j, 0), x(i, 1) - x(j, 1));
                if (d <= 0.0) {
                    continue;
                }
                double dl = delta.at(static_cast<uint32_t>(i),
                                     static_cast<uint32_t>(j));
                double entry = -1.0 / (dl * d);
                b(i, j) = entry;
                b(j, i) = entry;
                b(i, i) -= entry;
                b(j, j) -= entry;
            }
        }
        x = solver.solve(b * x);
        double current = raw_weighted_stress(delta, x);
        if (stress_trace != nullptr) {
            stress_trace->push_back(current);
        }
        if (prev <= 0.0 || (prev - current) / prev < options.tol) {
            break;
        }
        prev = current;
    }
    return to_drawing(x);
}

Drawing layout_fruchterman_reingold(const TimeSlice& slice, uint64_t seed,
                                    uint32_t iterations) {
    if (slice.vertex_count == 0) {
        raise(ErrorCode::InvalidArgument, "cannot lay out an empty slice");
    }
    if (iterations == 0) {
        raise(ErrorCode::InvalidArgument, "iterations must be positive");
    }
    const size_t n = slice.vertex_count;
    Rng rng(seed);
    double side = std::sqrt(static_cast<double>(n));
    std::vector<Point> pos(n);
    for (Point& p : pos) {
        p.x = rng.uniform(0.0, side);
        p.y = rng.uniform(0.0, side);
    }
    if (n == 1) {
        return make_drawing(std::move(pos));
    }

    // area n over n vertices puts the ideal length k at 1
    constexpr double kIdeal = 1.0;
    double t0 = side / 10.0;
    std::vector<Point> disp(n);
    for (uint32_t iter = 0; iter < iterations; ++iter) {
        for (Point& d : disp) {
            d = Point{0.0, 0.0};
        }
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                double dx = pos[i].x - pos[j].x;
                double dy = pos[i].y - pos[j].y;
                double d = std::hypot(dx, dy);
                if (d < 1e-9) {
                    constexpr double kTau = 6.283185307179586;
                    double angle = rng.uniform(0.0, kTau);
                    dx = 1e-9 * std::cos(angle);
                    dy = 1e-9 * std::sin(angle);
                    d = 1e-9;
                }
                double f = kIdeal * kIdeal / d; // repulsive
                disp[i].x += dx / d * f;
                disp[i].y += dy / d * f;
                disp[j].x -= dx / d * f;
                disp[j].y -= dy / d * f;
            }
        }
        for (const auto& [u, v] : slice.edges) {
            double dx = pos[u].x - pos[v].x;
            double dy = pos[u].y - pos[v].y;
            double d = std::hypot(dx, dy);
            if (d < 1e-9) {
                continue;
            }
            double f = d * d / kIdeal; // attractive
            disp[u].x -= dx / d * f;
            disp[u].y -= dy / d * f;
            disp[v].x += dx / d * f;
            disp[v].y += dy / d * f;
        }
        double t = t0 * (1.0 - static_cast<double>(iter) /
                                   static_cast<double>(iterations));
        for (size_t i = 0; i < n; ++i) {
            double d = std::hypot(disp[i].x, disp[i].y);
            if (d < 1e-12) {
                continue;
            }
            double step = std::min(d, t);
            pos[i].x += disp[i].x / d * step;
            pos[i].y += disp[i].y / d * step;
        }
    }
    return make_drawing(std::move(pos));
}

namespace {

// Quotient slice: one vertex per cluster, an edge wherever any member edge
// crosses between two clusters.
TimeSlice quotient_slice(const TimeSlice& slice, const Clustering& clustering) {
    EdgeList edges;
    for (const auto& [u, v] : slice.edges) {
        uint32_t cu = clustering.labels[u];
        uint32_t cv = clustering.labels[v];
        if (cu != cv) {
            edges.push_back(cu < cv ? std::pair{cu, cv} : std::pair{cv, cu});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return make_slice(clustering.cluster_count, std::move(edges));
}

// Separation 2.5x the cluster radius keeps k-means recovery reliable while
// leaving the drawing compact, so area-proportional jitter degrades the
// clustering gradually instead of all at once.
constexpr double kClusterRadius = 1.0;
constexpr double kCentroidSeparation = 2.5;

// One composed drawing: scaled quotient centroids plus per-cluster force
// layouts squeezed into a kClusterRadius disk. Returns false if the quotient
// layout degenerated.
bool compose_slice_drawing(const TimeSlice& slice, const Clustering& clustering,
                           uint64_t seed, Drawing& out) {
    uint32_t k = clustering.cluster_count;
    Drawing quotient =
        layout_stress_majorization(quotient_slice(slice, clustering),
                                   derive_seed(seed, 1));

    double scale = 1.0;
    if (k > 1) {
        double min_sep = std::numeric_limits<double>::infinity();
        for (uint32_t a = 0; a < k; ++a) {
            for (uint32_t b = a + 1; b < k; ++b) {
                min_sep = std::min(min_sep,
                                   euclidean(quotient.positions[a],
                                             quotient.positions[b]));
            }
        }
        if (min_sep < 1e-9) {
            return false;
        }
        scale = kCentroidSeparation / min_sep;
    }

    std::vector<std::vector<VertexId>> members(k);
    for (VertexId v = 0; v < slice.vertex_count; ++v) {
        members[clustering.labels[v]].push_back(v);
    }

    std::vector<Point> positions(slice.vertex_count);
    for (uint32_t c = 0; c < k; ++c) {
        const auto& verts = members[c];
        // induced subgraph with local indices
        std::vector<uint32_t> local(slice.vertex_count, UINT32_MAX);
        for (uint32_t i = 0; i < verts.size(); ++i) {
            local[verts[i]] = i;
        }
        EdgeList sub_edges;
        for (const auto& [u, v] : slice.edges) {
            if (local[u] != UINT32_MAX && local[v] != UINT32_MAX) {
                sub_edges.push_back(local[u] < local[v]
                                        ? std::pair{local[u], local[v]}
                                        : std::pair{local[v], local[u]});
            }
        }
        Drawing inner = layout_fruchterman_reingold(
            make_slice(static_cast<uint32_t>(verts.size()),
                       std::move(sub_edges)),
            derive_seed(seed, 100 + c));

        Point center{0.0, 0.0};
        for (const Point& p : inner.positions) {
            center.x += p.x;
            center.y += p.y;
        }
        center.x /= static_cast<double>(verts.size());
        center.y /= static_cast<double>(verts.size());
        double rmax = 0.0;
        for (const Point& p : inner.positions) {
            rmax = std::max(rmax, euclidean(p, center));
        }
        double shrink = rmax > 0.0 ? kClusterRadius / rmax : 0.0;

        Point anchor{quotient.positions[c].x * scale,
                     quotient.positions[c].y * scale};
        for (uint32_t i = 0; i < verts.size(); ++i) {
            positions[verts[i]] =
                Point{anchor.x + (inner.positions[i].x - center.x) * shrink,
                      anchor.y + (inner.positions[i].y - center.y) * shrink};
        }
    }
    out = make_drawing(std::move(positions));
    return true;
}

bool recovers_truth(const Clustering& truth, const Drawing& drawing,
                    uint64_t seed) {
    return cq(truth, drawing, ClusterIndex::Ari, seed) == 1.0;
}

} // namespace

std::pair<Drawing, Drawing> cluster_faithful_layout(const DynamicPair& pair,
                                                    uint64_t seed) {
    if (!pair.clustering1 || !pair.clustering2) {
        raise(ErrorCode::InvalidArgument,
              "pair carries no ground-truth clusterings");
    }
    for (uint32_t attempt = 0; attempt < 10; ++attempt) {
        uint64_t attempt_seed = derive_seed(seed, attempt);
        Drawing d1;
        Drawing d2;
        if (!compose_slice_drawing(pair.slice1, *pair.clustering1,
                                   derive_seed(attempt_seed, 11), d1) ||
            !compose_slice_drawing(pair.slice2, *pair.clustering2,
                                   derive_seed(attempt_seed, 22), d2)) {
            continue;
        }
        if (recovers_truth(*pair.clustering1, d1,
                           derive_seed(attempt_seed, 777)) &&
            recovers_truth(*pair.clustering2, d2,
                           derive_seed(attempt_seed, 778))) {
            return {std::move(d1), std::move(d2)};
        }
    }
    raise(ErrorCode::LayoutNotFaithful,
          "k-means failed to recover the ground truth after 10 attempts");
}

} // namespace dgcf
