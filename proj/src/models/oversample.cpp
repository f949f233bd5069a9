#include "screenbench/models/oversample.hpp"

#include "screenbench/error.hpp"
#include "screenbench/nn/rng.hpp"

namespace screenbench::models {

std::vector<std::size_t> oversample_minority(const std::vector<std::size_t>& indices,
                                             const std::vector<int>& labels, std::uint64_t seed) {
    std::vector<std::size_t> positives, negatives;
    for (std::size_t idx : indices) {
        if (idx >= labels.size())
            throw ValidationError("oversample_minority: index out of range");
        (labels[idx] == 1 ? positives : negatives).push_back(idx);
    }
    if (positives.empty() || negatives.empty())
        throw ValidationError("oversample_minority: both classes must be present");

    const auto& minority = positives.size() < negatives.size() ? positives : negatives;
    std::size_t target = std::max(positives.size(), negatives.size());

    nn::Rng rng(seed);
    std::vector<std::size_t> result(indices);
    for (std::size_t i = minority.size(); i < target; ++i)
        result.push_back(minority[rng.index(minority.size())]);
    rng.shuffle(result);
    return result;
}

} // namespace screenbench::models
