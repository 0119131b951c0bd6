#include "famtune/tape.hpp"

#include <cmath>
#include <numbers>

namespace famtune {

// splitmix64 finalizer; good avalanche for combining stream labels.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::size_t Rng::index(std::size_t n) {
    // Rejection sampling keeps the draw unbiased for any n.
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Rng open_stream(const RandomTape& tape, Stream stream, std::uint64_t a, std::uint64_t b) {
    std::uint64_t key = mix64(tape.seed);
    key = mix64(key ^ tape.stream_id);
    key = mix64(key ^ static_cast<std::uint64_t>(stream));
    key = mix64(key ^ a);
    key = mix64(key ^ b);
    return Rng(key);
}

}  // namespace famtune
