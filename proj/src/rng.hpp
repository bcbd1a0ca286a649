#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dgcf {

// Finalizer of the splitmix64 generator. Maps nearby inputs to decorrelated
// outputs, which is what seed derivation needs.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Splittable seed scheme: every dataset/step/restart gets its own stream id,
// so the amount of parallelism never changes which numbers are drawn.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    return mix64(base ^ mix64(stream + 0x632be59bd9b4e019ull));
}

// mt19937_64 with hand-coded draws. The engine's output sequence is fixed by
// the standard; std::uniform_* distributions are not, so we avoid them.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(mix64(seed)) {}

    uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform in [lo, hi)
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // uniform integer in [0, n); n must be positive
    uint64_t next_index(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % n;
    }

    // Fisher-Yates shuffle
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[next_index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace dgcf
