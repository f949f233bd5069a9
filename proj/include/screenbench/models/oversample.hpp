#pragma once

#include <cstdint>
#include <vector>

namespace screenbench::models {

/// Duplicates minority-class indices (sampling with replacement, seeded)
/// until both classes have equal counts, keeps the majority multiset intact,
/// and returns the whole list shuffled.
std::vector<std::size_t> oversample_minority(const std::vector<std::size_t>& indices,
                                             const std::vector<int>& labels, std::uint64_t seed);

} // namespace screenbench::models
