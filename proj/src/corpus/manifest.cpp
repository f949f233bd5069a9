#include "screenbench/corpus/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <unordered_set>

#include "screenbench/error.hpp"

namespace screenbench::corpus {

std::string to_string(ReviewGroup group) {
    switch (group) {
    case ReviewGroup::Drug: return "Drug";
    case ReviewGroup::Clinical: return "Clinical";
    case ReviewGroup::Swift: return "SWIFT";
    case ReviewGroup::Unknown: return "Unknown";
    }
    return "?";
}

ReviewGroup review_group_from_string(std::string_view name) {
    if (name == "Drug" || name == "drug") return ReviewGroup::Drug;
    if (name == "Clinical" || name == "clinical") return ReviewGroup::Clinical;
    if (name == "SWIFT" || name == "swift") return ReviewGroup::Swift;
    if (name == "Unknown" || name == "unknown" || name.empty()) return ReviewGroup::Unknown;
    throw ValidationError("unknown review group: " + std::string(name));
}

std::size_t DatasetManifest::included() const {
    std::size_t count = 0;
    for (const auto& [id, label] : entries)
        count += label == 1;
    return count;
}

DatasetManifest parse_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open manifest: " + path);

    DatasetManifest manifest;
    manifest.name = std::filesystem::path(path).stem().string();

    std::string line;
    std::size_t line_no = 0;
    std::unordered_set<std::string> seen;
    bool header_checked = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;

        if (!header_checked) {
            if (line != "doc_id,label")
                throw ParseError("expected header `doc_id,label`, got `" + line + "`", path,
                                 line_no);
            header_checked = true;
            continue;
        }

        std::size_t comma = line.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 >= line.size())
            throw ParseError("expected `doc_id,label`", path, line_no);
        std::string doc_id = line.substr(0, comma);
        std::string label_text = line.substr(comma + 1);
        if (label_text != "0" && label_text != "1")
            throw ParseError("label must be 0 or 1, got `" + label_text + "`", path, line_no);

        if (!seen.insert(doc_id).second)
            throw ValidationError(path + ": duplicate doc_id `" + doc_id + "` at line " +
                                  std::to_string(line_no));
        manifest.entries.emplace_back(std::move(doc_id), label_text == "1" ? 1 : 0);
    }

    if (!header_checked || manifest.entries.empty())
        throw ValidationError(path + ": manifest has no entries");
    std::size_t included = manifest.included();
    if (included == 0 || included == manifest.entries.size())
        throw ValidationError(path + ": manifest must contain both included and excluded entries");
    return manifest;
}

} // namespace screenbench::corpus
