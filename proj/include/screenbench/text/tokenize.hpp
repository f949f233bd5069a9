#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace screenbench::text {

/// Lowercases and splits on every non-alphanumeric byte. Used by the
/// averaged-embedding classifier, which keeps preprocessing minimal.
std::vector<std::string> tokenize_minimal(std::string_view input);

/// Whitespace tokenization with punctuation stripped from token edges;
/// tokens still containing any non-alphabetic byte are dropped. Used by the
/// convolutional model.
std::vector<std::string> tokenize_cnn(std::string_view input);

/// Order-preserving stoplist filter.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stoplist);

} // namespace screenbench::text
