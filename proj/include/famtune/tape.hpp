#pragma once

#include <cstdint>
#include <random>

namespace famtune {

/// Replayable randomness label. Identical (seed, stream_id) pairs reproduce
/// identical draws, which makes every randomized procedure in the toolkit a
/// pure function of its inputs plus a tape.
struct RandomTape {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

inline bool operator==(const RandomTape& a, const RandomTape& b) {
    return a.seed == b.seed && a.stream_id == b.stream_id;
}

/// Substream tags. Every consumer opens its own named stream so that adding
/// draws in one place never shifts the draws seen elsewhere.
enum class Stream : std::uint64_t {
    ItemValue = 1,
    ItemSize,
    Distance,
    EdgeFlip,
    EdgeWeight,
    LloydSeed,
    SdpInit,
    GaussianZ,
    RoundFlip,
    Sampler,
    Generic,
};

std::uint64_t mix64(std::uint64_t x);

/// Deterministic RNG with explicit floating-point conversions. The engine is
/// mt19937_64 (output sequence fixed by the standard); uniform/gaussian draws
/// avoid std distributions, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t key) : engine_(key) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open01() { return 1.0 - uniform01(); }

    /// Uniform on [a, b).
    double uniform(double a, double b) { return a + uniform01() * (b - a); }

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n);

    /// Standard normal via Box-Muller (deterministic, pair-cached).
    double gaussian();

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Opens the (tape, stream, a, b) substream.
Rng open_stream(const RandomTape& tape, Stream stream, std::uint64_t a = 0, std::uint64_t b = 0);

}  // namespace famtune
