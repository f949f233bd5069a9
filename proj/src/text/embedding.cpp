#include "screenbench/text/embedding.hpp"

#include <charconv>
#include <fstream>

#include "screenbench/error.hpp"

namespace screenbench::text {

EmbeddingTable parse_embedding_file(const std::string& path, std::size_t expected_dim) {
    if (expected_dim == 0)
        throw ValidationError("parse_embedding_file: expected_dim must be >= 1");
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open embedding file: " + path);

    EmbeddingTable table;
    table.dim = expected_dim;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;

        std::size_t pos = line.find(' ');
        if (pos == std::string::npos || pos == 0)
            throw ParseError("expected `token v1 ... vdim`", path, line_no);
        std::string token = line.substr(0, pos);

        std::vector<double> vec;
        vec.reserve(expected_dim);
        const char* p = line.data() + pos;
        const char* end = line.data() + line.size();
        while (p < end) {
            while (p < end && *p == ' ')
                ++p;
            if (p == end) break;
            double value = 0.0;
            auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc() || (next < end && *next != ' '))
                throw ParseError("unreadable number in embedding row", path, line_no);
            vec.push_back(value);
            p = next;
        }
        if (vec.size() != expected_dim)
            throw ParseError("embedding row has " + std::to_string(vec.size()) +
                                 " values, expected " + std::to_string(expected_dim),
                             path, line_no);

        auto it = table.vectors.find(token);
        if (it != table.vectors.end()) {
            table.warnings.push_back("duplicate token '" + token + "' at line " +
                                     std::to_string(line_no) + "; keeping the later row");
            it->second = std::move(vec);
        } else {
            table.vectors.emplace(std::move(token), std::move(vec));
        }
    }
    return table;
}

} // namespace screenbench::text
