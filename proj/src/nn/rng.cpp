#include "screenbench/nn/rng.hpp"

namespace screenbench::nn {

namespace {

// splitmix64; also used to expand the seed into the running state.
std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed) : state_(seed) {
    // Warm up so that small consecutive seeds give unrelated streams.
    next_u64();
    next_u64();
}

std::uint64_t Rng::next_u64() {
    return splitmix64(state_);
}

double Rng::uniform01() {
    // 53 high bits -> double in [0, 1).
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

std::size_t Rng::index(std::size_t n) {
    // Rejection sampling keeps the distribution exactly uniform.
    std::uint64_t bound = n;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return static_cast<std::size_t>(v % bound);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = base;
    std::uint64_t h = splitmix64(x);
    x ^= h + a * 0x9e3779b97f4a7c15ull;
    h = splitmix64(x);
    x ^= h + b * 0xc2b2ae3d27d4eb4full;
    return splitmix64(x);
}

} // namespace screenbench::nn
