#pragma once

#include <cstdint>
#include <vector>

namespace screenbench::nn {

/// Deterministic pseudo-random source. All randomness in the project flows
/// through instances of this class so that a run is fully determined by its
/// seeds; no code reads ambient entropy.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform01();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n). n must be > 0.
    std::size_t index(std::size_t n);

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        if (items.size() < 2) return;
        for (std::size_t i = items.size() - 1; i > 0; --i) {
            std::size_t j = index(i + 1);
            using std::swap;
            swap(items[i], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Mixes a base seed with stream identifiers (e.g. repetition and half
/// indices) into an independent stream seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

} // namespace screenbench::nn
