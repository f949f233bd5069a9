#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace screenbench::text {

/// Token-to-index mapping. Index 0 is reserved for padding/unknown; stored
/// tokens get contiguous indices 1..size in order of descending corpus
/// frequency, ties broken lexicographically.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<std::pair<std::string, std::size_t>> ordered_tokens,
               std::size_t min_count);

    /// Index of the token, or 0 when unknown.
    std::size_t index_of(const std::string& token) const;

    std::size_t size() const { return size_; }
    std::size_t min_count() const { return min_count_; }
    const std::unordered_map<std::string, std::size_t>& token_to_index() const {
        return token_to_index_;
    }

private:
    std::unordered_map<std::string, std::size_t> token_to_index_;
    std::size_t min_count_ = 1;
    std::size_t size_ = 0;
};

/// Sparse binary/weighted document vector over a vocabulary of `dim` slots
/// (valid indices are 1..dim).
struct BowVector {
    std::vector<std::size_t> indices;  // strictly increasing, in [1, dim]
    std::vector<double> values;        // parallel to indices, all > 0
    std::size_t dim = 0;
};

/// Builds a vocabulary from a tokenized corpus. Throws ValidationError when
/// the corpus is empty or no token reaches min_count.
Vocabulary build_vocab(const std::vector<std::vector<std::string>>& corpus,
                       std::size_t min_count);

/// Binary-presence bag of words: weight 1 for every distinct in-vocabulary
/// token, out-of-vocabulary tokens ignored.
BowVector vectorize_bow(const std::vector<std::string>& tokens, const Vocabulary& vocab);

} // namespace screenbench::text
