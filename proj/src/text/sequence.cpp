#include "screenbench/text/sequence.hpp"

#include "screenbench/error.hpp"

namespace screenbench::text {

SequenceEncoding encode_sequence(const std::vector<std::string>& tokens, const Vocabulary& vocab,
                                 std::size_t max_len) {
    if (max_len < 1)
        throw ValidationError("encode_sequence: max_len must be >= 1");
    SequenceEncoding enc;
    enc.token_ids.assign(max_len, 0);
    enc.true_length = std::min(tokens.size(), max_len);
    for (std::size_t i = 0; i < enc.true_length; ++i)
        enc.token_ids[i] = vocab.index_of(tokens[i]);
    return enc;
}

} // namespace screenbench::text
