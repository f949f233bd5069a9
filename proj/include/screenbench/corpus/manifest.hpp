#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace screenbench::corpus {

enum class ReviewGroup { Drug, Clinical, Swift, Unknown };

std::string to_string(ReviewGroup group);
ReviewGroup review_group_from_string(std::string_view name);

/// A dataset definition: ordered (doc_id, label) pairs plus a display name.
struct DatasetManifest {
    std::string name;
    ReviewGroup group = ReviewGroup::Unknown;
    std::vector<std::pair<std::string, int>> entries;

    std::size_t total() const { return entries.size(); }
    std::size_t included() const;
};

/// Parses a `doc_id,label` CSV (header required, UTF-8, LF endings; a
/// trailing CR is tolerated). Entries keep file order. Throws ParseError for
/// malformed lines and ValidationError for duplicate ids, an empty file, or
/// a single-class dataset. The manifest name defaults to the file stem.
DatasetManifest parse_manifest(const std::string& path);

} // namespace screenbench::corpus
