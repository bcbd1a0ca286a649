#include "cluster_compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rng.hpp"

namespace dgcf {

namespace {

void check_same_size(const Clustering& a, const Clustering& b) {
    if (a.labels.size() != b.labels.size()) {
        raise(ErrorCode::SizeMismatch,
              "partitions cover different element counts (" +
                  std::to_string(a.labels.size()) + " vs " +
                  std::to_string(b.labels.size()) + ")");
    }
}

inline uint64_t pairs_of(uint64_t x) { return x * (x - 1) / 2; }

// Identical as partitions, i.e. equal up to label renaming.
bool same_partition(const Clustering& a, const Clustering& b) {
    if (a.cluster_count != b.cluster_count) {
        return false;
    }
    std::vector<uint32_t> map_ab(a.cluster_count, UINT32_MAX);
    for (size_t i = 0; i < a.labels.size(); ++i) {
        uint32_t la = a.labels[i];
        if (map_ab[la] == UINT32_MAX) {
            map_ab[la] = b.labels[i];
        } else if (map_ab[la] != b.labels[i]) {
            return false;
        }
    }
    // cluster counts match and every a-cluster maps into one b-cluster,
    // so the map is a bijection
    return true;
}

struct PairSums {
    uint64_t together_both = 0; // pairs co-clustered in A and in B
    uint64_t together_a = 0;    // pairs co-clustered in A
    uint64_t together_b = 0;    // pairs co-clustered in B
    uint64_t total = 0;
};

PairSums pair_sums(const ContingencyTable& t) {
    PairSums s;
    s.total = pairs_of(t.n);
    for (uint64_t c : t.counts) {
        s.together_both += pairs_of(c);
    }
    for (uint32_t i = 0; i < t.rows; ++i) {
        uint64_t row = 0;
        for (uint32_t j = 0; j < t.cols; ++j) {
            row += t.at(i, j);
        }
        s.together_a += pairs_of(row);
    }
    for (uint32_t j = 0; j < t.cols; ++j) {
        uint64_t col = 0;
        for (uint32_t i = 0; i < t.rows; ++i) {
            col += t.at(i, j);
        }
        s.together_b += pairs_of(col);
    }
    return s;
}

} // namespace

ContingencyTable contingency_table(const Clustering& a, const Clustering& b) {
    check_same_size(a, b);
    ContingencyTable t;
    t.rows = a.cluster_count;
    t.cols = b.cluster_count;
    t.n = a.labels.size();
    t.counts.assign(static_cast<size_t>(t.rows) * t.cols, 0);
    for (size_t i = 0; i < a.labels.size(); ++i) {
        ++t.counts[static_cast<size_t>(a.labels[i]) * t.cols + b.labels[i]];
    }
    return t;
}

double adjusted_rand_index(const Clustering& a, const Clustering& b) {
    check_same_size(a, b);
    PairSums s = pair_sums(contingency_table(a, b));
    if (s.total == 0) {
        return 1.0; // single element, trivially identical
    }
    double index = static_cast<double>(s.together_both);
    double expected = static_cast<double>(s.together_a) *
                      static_cast<double>(s.together_b) /
                      static_cast<double>(s.total);
    double max_index = 0.5 * (static_cast<double>(s.together_a) +
                              static_cast<double>(s.together_b));
    double denom = max_index - expected;
    if (denom == 0.0) {
        return same_partition(a, b) ? 1.0 : 0.0;
    }
    return (index - expected) / denom;
}

double fowlkes_mallows_index(const Clustering& a, const Clustering& b) {
    check_same_size(a, b);
    PairSums s = pair_sums(contingency_table(a, b));
    if (s.together_a == 0 && s.together_b == 0) {
        return 1.0; // both all-singletons
    }
    if (s.together_a == 0 || s.together_b == 0) {
        return 0.0;
    }
    return static_cast<double>(s.together_both) /
           std::sqrt(static_cast<double>(s.together_a) *
                     static_cast<double>(s.together_b));
}

double cluster_index(const Clustering& a, const Clustering& b,
                     ClusterIndex index) {
    return index == ClusterIndex::Ari ? adjusted_rand_index(a, b)
                                      : fowlkes_mallows_index(a, b);
}

namespace {

constexpr uint32_t kKmeansRestarts = 10;
constexpr uint32_t kKmeansMaxIter = 100;
constexpr double kKmeansTol = 1e-6;

inline double dist2(Point a, Point b) {
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

size_t distinct_point_count(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    size_t count = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i == 0 || pts[i].x != pts[i - 1].x || pts[i].y != pts[i - 1].y) {
            ++count;
        }
    }
    return count;
}

std::vector<Point> kmeanspp_init(const std::vector<Point>& points, uint32_t k,
                                 Rng& rng) {
    const size_t n = points.size();
    std::vector<Point> centers;
    centers.reserve(k);
    centers.push_back(points[rng.next_index(n)]);

    std::vector<double> min_d2(n);
    for (size_t i = 0; i < n; ++i) {
        min_d2[i] = dist2(points[i], centers[0]);
    }
    while (centers.size() < k) {
        double total = 0.0;
        for (double d : min_d2) {
            total += d;
        }
        // distinct points > chosen centers, so total stays positive
        double target = rng.next_double() * total;
        size_t pick = n - 1;
        double cum = 0.0;
        for (size_t i = 0; i < n; ++i) {
            cum += min_d2[i];
            if (cum > target) {
                pick = i;
                break;
            }
        }
        centers.push_back(points[pick]);
        for (size_t i = 0; i < n; ++i) {
            min_d2[i] = std::min(min_d2[i], dist2(points[i], centers.back()));
        }
    }
    return centers;
}

struct LloydResult {
    std::vector<uint32_t> labels;
    double inertia = std::numeric_limits<double>::infinity();
};

LloydResult lloyd(const std::vector<Point>& points, uint32_t k, Rng& rng) {
    const size_t n = points.size();
    std::vector<Point> centers = kmeanspp_init(points, k, rng);
    std::vector<uint32_t> labels(n, 0);
    std::vector<uint32_t> sizes(k, 0);

    for (uint32_t iter = 0; iter < kKmeansMaxIter; ++iter) {
        std::fill(sizes.begin(), sizes.end(), 0u);
        for (size_t i = 0; i < n; ++i) {
            double best = dist2(points[i], centers[0]);
            uint32_t arg = 0;
            for (uint32_t c = 1; c < k; ++c) {
                double d = dist2(points[i], centers[c]);
                if (d < best) {
                    best = d;
                    arg = c;
                }
            }
            labels[i] = arg;
            ++sizes[arg];
        }

        // repair: hand each empty cluster the point farthest from its
        // current centroid, stealing only from clusters with >= 2 members
        for (uint32_t c = 0; c < k; ++c) {
            if (sizes[c] != 0) {
                continue;
            }
            double worst = -1.0;
            size_t worst_i = SIZE_MAX;
            for (size_t i = 0; i < n; ++i) {
                if (sizes[labels[i]] < 2) {
                    continue;
                }
                double d = dist2(points[i], centers[labels[i]]);
                if (d > worst) {
                    worst = d;
                    worst_i = i;
                }
            }
            --sizes[labels[worst_i]];
            labels[worst_i] = c;
            ++sizes[c];
            centers[c] = points[worst_i];
        }

        std::vector<Point> next(k, Point{0.0, 0.0});
        for (size_t i = 0; i < n; ++i) {
            next[labels[i]].x += points[i].x;
            next[labels[i]].y += points[i].y;
        }
        double shift = 0.0;
        for (uint32_t c = 0; c < k; ++c) {
            next[c].x /= sizes[c];
            next[c].y /= sizes[c];
            shift = std::max(shift, euclidean(next[c], centers[c]));
        }
        centers = std::move(next);
        if (shift < kKmeansTol) {
            break;
        }
    }

    LloydResult result;
    result.labels = std::move(labels);
    result.inertia = 0.0;
    for (size_t i = 0; i < n; ++i) {
        result.inertia += dist2(points[i], centers[result.labels[i]]);
    }
    return result;
}

} // namespace

Clustering kmeans(const std::vector<Point>& points, uint32_t k,
                  uint64_t seed) {
    if (k == 0) {
        raise(ErrorCode::InvalidArgument, "k must be positive");
    }
    if (points.empty()) {
        raise(ErrorCode::InvalidArgument, "no points to cluster");
    }
    size_t distinct = distinct_point_count(points);
    if (k > distinct) {
        raise(ErrorCode::TooFewPoints,
              "k = " + std::to_string(k) + " exceeds " +
                  std::to_string(distinct) + " distinct points");
    }

    LloydResult best;
    for (uint32_t restart = 0; restart < kKmeansRestarts; ++restart) {
        Rng rng(derive_seed(seed, restart));
        LloydResult run = lloyd(points, k, rng);
        if (run.inertia < best.inertia) {
            best = std::move(run);
        }
    }
    return make_clustering(std::move(best.labels));
}

Clustering geometric_clustering(const Drawing& drawing, uint32_t k,
                                uint64_t seed) {
    return kmeans(drawing.positions, k, seed);
}

double cq(const Clustering& ground_truth, const Drawing& drawing,
          ClusterIndex index, uint64_t seed) {
    if (ground_truth.labels.size() != drawing.positions.size()) {
        raise(ErrorCode::SizeMismatch,
              "ground truth covers " +
                  std::to_string(ground_truth.labels.size()) +
                  " vertices, drawing has " +
                  std::to_string(drawing.positions.size()));
    }
    Clustering geometric =
        geometric_clustering(drawing, ground_truth.cluster_count, seed);
    return cluster_index(ground_truth, geometric, index);
}

} // namespace dgcf
