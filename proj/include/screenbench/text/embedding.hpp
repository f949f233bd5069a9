#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace screenbench::text {

/// Pretrained word vectors keyed by token. All vectors share dimension dim.
struct EmbeddingTable {
    std::size_t dim = 0;
    std::unordered_map<std::string, std::vector<double>> vectors;
    std::vector<std::string> warnings;  // e.g. duplicate tokens (last wins)

    const std::vector<double>* find(const std::string& token) const {
        auto it = vectors.find(token);
        return it == vectors.end() ? nullptr : &it->second;
    }
};

/// Parses a GloVe-style text file: one `token v1 v2 ... vdim` line per token,
/// space separated. Throws ParseError (with line number) on a dimension
/// mismatch or an unreadable number.
EmbeddingTable parse_embedding_file(const std::string& path, std::size_t expected_dim);

} // namespace screenbench::text
