#pragma once

#include <optional>
#include <string>

#include "screenbench/corpus/record.hpp"

namespace screenbench::corpus {

/// One flat file per document in a tagged-line format (`TI  - `, `AB  - `,
/// `AU  - `, `JT  - `, `LB  - `), human-inspectable and diff-friendly.
/// Files live directly in the dataset's cache directory as `<doc_id>.txt`.

std::string cache_file_path(const std::string& cache_dir, const std::string& doc_id);

/// Writes the record, creating the directory if needed. Field values are
/// single-line (newlines were normalized at parse time).
void store_record(const std::string& cache_dir, const DocumentRecord& record);

/// Returns the cached record, or nullopt when no file exists.
std::optional<DocumentRecord> load_cached_record(const std::string& cache_dir,
                                                 const std::string& doc_id);

/// Appends one line to the dataset's fetch log: tab-separated UTC timestamp,
/// id batch and status.
void append_fetch_log(const std::string& cache_dir, const std::string& id_batch,
                      const std::string& status);

} // namespace screenbench::corpus
