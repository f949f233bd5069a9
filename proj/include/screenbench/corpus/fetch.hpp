#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "screenbench/corpus/manifest.hpp"
#include "screenbench/corpus/record.hpp"

namespace screenbench::corpus {

/// Literature web API endpoint. Defaults are polite toward public services;
/// everything is overridable via config file and SCREENBENCH_* environment
/// variables.
struct EndpointConfig {
    std::string base_url;        // e.g. http://host:port/fetch
    std::string api_key;         // optional, sent as api_key=<...>
    double rate_limit_per_sec = 3.0;
    std::size_t batch_size = 100;
    std::size_t max_retries = 3;
    std::size_t backoff_initial_ms = 500;  // doubles per retry

    void validate() const;
};

/// Reads `key = value` pairs (base_url, api_key, rate_limit, batch_size,
/// max_retries, backoff_initial_ms), then applies environment overrides
/// SCREENBENCH_BASE_URL, SCREENBENCH_API_KEY, SCREENBENCH_RATE_LIMIT,
/// SCREENBENCH_BATCH_SIZE.
EndpointConfig load_endpoint_config(const std::string& path);
EndpointConfig endpoint_config_from_env(EndpointConfig base = {});

struct FetchSummary {
    std::size_t from_cache = 0;
    std::size_t fetched = 0;
    std::size_t missing = 0;       // ids the endpoint did not return
    std::size_t api_calls = 0;
    std::vector<std::string> warnings;
};

/// Returns one record per manifest entry, in manifest order. Cached records
/// are served without network traffic; the rest are requested in id batches,
/// rate limited, retried with exponential backoff, and persisted to the
/// cache before returning. Ids absent from the response become records with
/// empty text fields plus a warning and a fetch-log entry.
std::vector<DocumentRecord> fetch_records(const DatasetManifest& manifest,
                                          const EndpointConfig& endpoint,
                                          const std::string& cache_dir,
                                          FetchSummary* summary = nullptr);

/// Parses a MEDLINE-style tagged response: records separated by blank lines,
/// `XXXX- value` tag lines, continuation lines indented with spaces.
/// Recognized tags: PMID/ID (identifier), TI (title), AB (abstract),
/// AU/FAU (authors, joined with "; "), JT (journal).
std::vector<DocumentRecord> parse_tagged_response(const std::string& body);

} // namespace screenbench::corpus
