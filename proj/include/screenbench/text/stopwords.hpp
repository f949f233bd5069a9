#pragma once

#include <string>
#include <unordered_set>

namespace screenbench::text {

/// Loads a stoplist file: one token per line, UTF-8, blank lines ignored.
std::unordered_set<std::string> load_stoplist(const std::string& path);

/// The English stoplist shipped with the project (same contents as
/// data/stopwords_en.txt).
const std::unordered_set<std::string>& default_stoplist();

} // namespace screenbench::text
