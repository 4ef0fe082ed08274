#pragma once

#include <cstdint>

namespace xfc {

/// Counter-based splittable random generator.
///
/// Every output is a pure function of (seed, counter): the SplitMix64
/// finalizer applied to seed + (counter + 1) * kGolden. Streams for
/// sub-computations (Monte-Carlo trials, NMF restarts) are derived by
/// hashing (seed, stream index) with a distinct salt, so results do not
/// depend on scheduling or worker count. Constants are documented in the
/// README.
class CounterRng {
public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kStreamSalt = 0xD1342543DE82EF95ull;

    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t at(std::uint64_t counter) const {
        return finalize(seed_ + (counter + 1) * kGolden);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1]; never returns zero.
    double uniform_open01(std::uint64_t counter) const {
        return static_cast<double>((at(counter) >> 11) + 1) * 0x1.0p-53;
    }

    bool bernoulli(std::uint64_t counter, double p) const {
        return uniform01(counter) < p;
    }

    /// Derived generator for an independent stream.
    CounterRng stream(std::uint64_t stream_index) const {
        return CounterRng(finalize(seed_ ^ kStreamSalt ^ (stream_index + 1) * kGolden));
    }

private:
    std::uint64_t seed_;
};

}  // namespace xfc
