#pragma once

#include <cstdint>
#include <random>

namespace mrta {

// Deterministic, splittable RNG. All experiment randomness flows from one
// top-level seed; child streams are derived by mixing, never by sharing
// generator state. Uniform doubles are produced from raw 64-bit draws so
// results do not depend on libstdc++ distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(mix(seed)) {}

    // Independent child stream; same (seed, tag) always yields the same stream.
    Rng split(uint64_t tag) const { return Rng(mix(seed_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)))); }

    uint64_t next() { return gen_(); }

    // [0, 1)
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Inclusive range, fixed-point multiply keeps the mapping platform-stable.
    int uniform_int(int lo, int hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        const auto r = static_cast<uint64_t>((static_cast<__uint128_t>(next()) * span) >> 64);
        return lo + static_cast<int>(r);
    }

    bool bernoulli(double p) { return unit() < p; }

    uint64_t seed() const { return seed_; }

private:
    static uint64_t mix(uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace mrta
