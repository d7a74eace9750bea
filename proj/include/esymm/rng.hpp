#pragma once

#include <cstdint>

#include "esymm/rational.hpp"

namespace esymm {

/// Deterministic splitmix64 stream.  Used everywhere randomness is needed so
/// that reports are reproducible bit-for-bit across platforms for a fixed
/// seed (the standard-library distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [0, m); m > 0.
    std::uint64_t below(std::uint64_t m) { return next() % m; }

    long int_in(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    /// Small rational with numerator in [-num_mag, num_mag] and denominator
    /// in [1, den_max].
    Rational rational(long num_mag = 3, long den_max = 3) {
        return Rational(int_in(-num_mag, num_mag), int_in(1, den_max));
    }

    /// Deterministically derived substream.
    Rng fork(std::uint64_t tag) { return Rng(next() ^ (tag * 0x9e3779b97f4a7c15ULL)); }

private:
    std::uint64_t state_;
};

} // namespace esymm
