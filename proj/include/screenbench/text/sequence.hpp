#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "screenbench/text/vocab.hpp"

namespace screenbench::text {

/// Fixed-length token-id encoding. Positions at or beyond true_length hold
/// the padding id 0; out-of-vocabulary tokens inside the document also map
/// to 0.
struct SequenceEncoding {
    std::vector<std::size_t> token_ids;  // exactly max_len entries
    std::size_t true_length = 0;
};

/// Keeps the first max_len tokens (truncating from the end) and right-pads
/// with id 0.
SequenceEncoding encode_sequence(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                                 std::size_t max_len);

} // namespace screenbench::text
