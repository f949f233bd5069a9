#include "screenbench/text/tokenize.hpp"

#include <cctype>

namespace screenbench::text {

namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_alpha(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char lower(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

} // namespace

std::vector<std::string> tokenize_minimal(std::string_view input) {
    std::vector<std::string> tokens;
    std::string current;
    for (unsigned char c : input) {
        if (is_ascii_alnum(c)) {
            current.push_back(lower(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> tokenize_cnn(std::string_view input) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i])))
            ++i;
        std::size_t start = i;
        while (i < input.size() && !std::isspace(static_cast<unsigned char>(input[i])))
            ++i;
        if (i == start) continue;
        std::string_view raw = input.substr(start, i - start);
        // Strip non-alphanumeric edges, then require a purely alphabetic core.
        std::size_t lo = 0, hi = raw.size();
        while (lo < hi && !is_ascii_alnum(static_cast<unsigned char>(raw[lo])))
            ++lo;
        while (hi > lo && !is_ascii_alnum(static_cast<unsigned char>(raw[hi - 1])))
            --hi;
        if (lo == hi) continue;
        bool alphabetic = true;
        std::string token;
        token.reserve(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) {
            unsigned char c = raw[k];
            if (!is_ascii_alpha(c)) {
                alphabetic = false;
                break;
            }
            token.push_back(lower(c));
        }
        if (alphabetic)
            tokens.push_back(std::move(token));
    }
    return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const std::unordered_set<std::string>& stoplist) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& t : tokens)
        if (!stoplist.contains(t))
            kept.push_back(t);
    return kept;
}

} // namespace screenbench::text
