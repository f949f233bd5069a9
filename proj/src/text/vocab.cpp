#include "screenbench/text/vocab.hpp"

#include <algorithm>
#include <map>

#include "screenbench/error.hpp"

namespace screenbench::text {

Vocabulary::Vocabulary(std::vector<std::pair<std::string, std::size_t>> ordered_tokens,
                       std::size_t min_count)
    : min_count_(min_count) {
    token_to_index_.reserve(ordered_tokens.size());
    for (auto& [token, count] : ordered_tokens) {
        (void)count;
        token_to_index_.emplace(std::move(token), ++size_);
    }
}

std::size_t Vocabulary::index_of(const std::string& token) const {
    auto it = token_to_index_.find(token);
    return it == token_to_index_.end() ? 0 : it->second;
}

Vocabulary build_vocab(const std::vector<std::vector<std::string>>& corpus,
                       std::size_t min_count) {
    if (min_count < 1)
        throw ValidationError("build_vocab: min_count must be >= 1");
    if (corpus.empty())
        throw ValidationError("build_vocab: empty corpus");

    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& doc : corpus)
        for (const auto& token : doc)
            ++counts[token];

    std::vector<std::pair<std::string, std::size_t>> kept;
    kept.reserve(counts.size());
    for (auto& [token, count] : counts)
        if (count >= min_count)
            kept.emplace_back(token, count);
    if (kept.empty())
        throw ValidationError("build_vocab: no token reaches min_count=" +
                              std::to_string(min_count));

    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return Vocabulary(std::move(kept), min_count);
}

BowVector vectorize_bow(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
    if (vocab.size() == 0)
        throw ValidationError("vectorize_bow: empty vocabulary");
    BowVector bow;
    bow.dim = vocab.size();
    std::map<std::size_t, double> present;
    for (const auto& token : tokens) {
        std::size_t idx = vocab.index_of(token);
        if (idx != 0)
            present[idx] = 1.0;
    }
    bow.indices.reserve(present.size());
    bow.values.reserve(present.size());
    for (auto& [idx, value] : present) {
        bow.indices.push_back(idx);
        bow.values.push_back(value);
    }
    return bow;
}

} // namespace screenbench::text
