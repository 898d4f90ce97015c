#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pwss {

/// Deterministic 64-bit generator (SplitMix64). Every randomized operation
/// in the library draws from this engine instead of <random> distributions,
/// so results are identical across compilers and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Collapses (seed, stream ids...) into one substream seed. Parallel and
/// serial runs agree because each unit of work hashes its own stream id.
std::uint64_t substream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids);

inline std::uint64_t substream(std::uint64_t seed, std::uint64_t id) {
    return substream(seed, {id});
}

/// Fisher-Yates shuffle driven by SplitMix64.
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(values[i - 1], values[j]);
    }
}

std::vector<std::size_t> shuffled_indices(std::size_t n, SplitMix64& rng);

/// k distinct values from [0, n), in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                    SplitMix64& rng);

}  // namespace pwss
