#pragma once

#include <cstdint>
#include <random>

namespace fairopt {

// splitmix64 finalizer; folds stream parameters into a single 64-bit seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic 64-bit generator (mt19937_64, whose output sequence is fixed
// by the standard). One stream per instance, keyed by (seed, n, d, kind).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static Rng stream(std::uint64_t seed, std::uint64_t n, std::uint64_t d, std::uint64_t kind) {
        std::uint64_t s = mix64(seed);
        s = mix64(s ^ mix64(n));
        s = mix64(s ^ mix64(d + 0x100));
        s = mix64(s ^ mix64(kind + 0x10000));
        return Rng(s);
    }

    // Uniform integer in [lo, hi]. Plain modulo draw: the bias at the ranges
    // used here (spans of at most a few hundred) is far below 2^-50 and the
    // draw sequence stays platform-independent.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(gen_() % span);
    }

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t next() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace fairopt
