#pragma once

#include <cstdint>

namespace aeronav {

/// splitmix64: cheap, well-mixed stream used both as a generator and to
/// derive independent child seeds from a single run seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive a named child seed so sub-systems (scene gen, episode gen,
/// planner) consume independent streams from one top-level seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0xa0761d6478bd642fULL * (stream + 1));
    return splitmix64(s);
}

/// Deterministic RNG with the handful of draws the generators need.
/// Self-contained so outputs are stable across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {  // inclusive range
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    }

    double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool next_bool(double p_true = 0.5) { return next_double() < p_true; }

private:
    std::uint64_t state_;
};

}  // namespace aeronav
