#include "screenbench/corpus/fetch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>
#include <unordered_map>

#include <httplib.h>

#include "screenbench/corpus/cache.hpp"
#include "screenbench/error.hpp"

namespace screenbench::corpus {

namespace {

std::string trim(const std::string& s) {
    std::size_t lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return "";
    std::size_t hi = s.find_last_not_of(" \t\r");
    return s.substr(lo, hi - lo + 1);
}

// Splits http://host:port/path into (scheme://host:port, /path).
std::pair<std::string, std::string> split_url(const std::string& url) {
    std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw ValidationError("endpoint base_url must include a scheme: " + url);
    std::size_t path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos)
        return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

class RateLimiter {
public:
    explicit RateLimiter(double per_second) {
        if (per_second > 0.0)
            min_interval_ = std::chrono::duration<double>(1.0 / per_second);
    }

    void wait() {
        if (min_interval_.count() == 0.0) return;
        auto now = std::chrono::steady_clock::now();
        if (last_.time_since_epoch().count() != 0) {
            auto next_allowed = last_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(min_interval_);
            if (now < next_allowed)
                std::this_thread::sleep_for(next_allowed - now);
        }
        last_ = std::chrono::steady_clock::now();
    }

private:
    std::chrono::duration<double> min_interval_{0.0};
    std::chrono::steady_clock::time_point last_{};
};

std::string join_ids(const std::vector<std::string>& ids) {
    std::string out;
    for (const auto& id : ids) {
        if (!out.empty()) out.push_back(',');
        out += id;
    }
    return out;
}

std::string fetch_batch_body(const EndpointConfig& endpoint, const std::string& id_list) {
    auto [host, path] = split_url(endpoint.base_url);
    httplib::Client client(host);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);

    httplib::Params params;
    params.emplace("id", id_list);
    if (!endpoint.api_key.empty())
        params.emplace("api_key", endpoint.api_key);
    std::string target = httplib::append_query_params(path, params);

    auto res = client.Get(target);
    if (!res)
        throw FetchError("transport failure for batch [" + id_list +
                         "]: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw FetchError("endpoint returned status " + std::to_string(res->status) +
                         " for batch [" + id_list + "]");
    return res->body;
}

} // namespace

void EndpointConfig::validate() const {
    if (base_url.empty())
        throw ValidationError("endpoint base_url is required");
    if (batch_size < 1)
        throw ValidationError("endpoint batch_size must be >= 1");
    if (!(rate_limit_per_sec > 0.0))
        throw ValidationError("endpoint rate_limit must be > 0");
}

EndpointConfig load_endpoint_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open endpoint config: " + path);
    EndpointConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string text = trim(line);
        if (text.empty() || text[0] == '#' || text[0] == ';')
            continue;
        std::size_t eq = text.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected `key = value`", path, line_no);
        std::string key = trim(text.substr(0, eq));
        std::string value = trim(text.substr(eq + 1));
        try {
            if (key == "base_url") config.base_url = value;
            else if (key == "api_key") config.api_key = value;
            else if (key == "rate_limit") config.rate_limit_per_sec = std::stod(value);
            else if (key == "batch_size") config.batch_size = std::stoul(value);
            else if (key == "max_retries") config.max_retries = std::stoul(value);
            else if (key == "backoff_initial_ms") config.backoff_initial_ms = std::stoul(value);
            else throw ParseError("unknown endpoint key `" + key + "`", path, line_no);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad value for `" + key + "`", path, line_no);
        }
    }
    return endpoint_config_from_env(std::move(config));
}

EndpointConfig endpoint_config_from_env(EndpointConfig base) {
    if (const char* v = std::getenv("SCREENBENCH_BASE_URL")) base.base_url = v;
    if (const char* v = std::getenv("SCREENBENCH_API_KEY")) base.api_key = v;
    if (const char* v = std::getenv("SCREENBENCH_RATE_LIMIT")) base.rate_limit_per_sec = std::stod(v);
    if (const char* v = std::getenv("SCREENBENCH_BATCH_SIZE")) base.batch_size = std::stoul(v);
    return base;
}

std::vector<DocumentRecord> parse_tagged_response(const std::string& body) {
    std::vector<DocumentRecord> records;
    DocumentRecord current;
    std::string last_tag;
    std::vector<std::string> authors;
    bool in_record = false;

    auto flush = [&] {
        if (!in_record) return;
        std::string joined;
        for (const auto& a : authors) {
            if (!joined.empty()) joined += "; ";
            joined += a;
        }
        current.authors = joined;
        if (!current.doc_id.empty())
            records.push_back(current);
        current = DocumentRecord{};
        authors.clear();
        last_tag.clear();
        in_record = false;
    };

    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t nl = body.find('\n', pos);
        std::string line = nl == std::string::npos ? body.substr(pos) : body.substr(pos, nl - pos);
        pos = nl == std::string::npos ? body.size() + 1 : nl + 1;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();

        if (trim(line).empty()) {
            flush();
            continue;
        }
        if (line[0] == ' ' || line[0] == '\t') {
            // Continuation of the previous field value.
            std::string extra = trim(line);
            if (extra.empty() || last_tag.empty()) continue;
            std::string* target = nullptr;
            if (last_tag == "TI") target = &current.title;
            else if (last_tag == "AB") target = &current.abstract;
            else if (last_tag == "JT") target = &current.journal;
            else if ((last_tag == "AU" || last_tag == "FAU") && !authors.empty())
                target = &authors.back();
            if (target) {
                if (!target->empty()) target->push_back(' ');
                *target += extra;
            }
            continue;
        }

        std::size_t dash = line.find("- ");
        if (dash == std::string::npos || dash == 0 || dash > 5) {
            // Not a tag line; ignore (keeps the parser robust to banners).
            continue;
        }
        std::string tag = trim(line.substr(0, dash));
        std::string value = line.substr(dash + 2);
        in_record = true;
        last_tag = tag;
        if (tag == "PMID" || tag == "ID") current.doc_id = trim(value);
        else if (tag == "TI") current.title = trim(value);
        else if (tag == "AB") current.abstract = trim(value);
        else if (tag == "JT") current.journal = trim(value);
        else if (tag == "AU" || tag == "FAU") authors.push_back(trim(value));
        // Unknown tags are skipped but still terminate continuations onto them.
    }
    flush();
    return records;
}

std::vector<DocumentRecord> fetch_records(const DatasetManifest& manifest,
                                          const EndpointConfig& endpoint,
                                          const std::string& cache_dir, FetchSummary* summary) {
    FetchSummary local;
    FetchSummary& sum = summary ? *summary : local;

    std::unordered_map<std::string, DocumentRecord> loaded;
    std::vector<std::string> to_fetch;
    for (const auto& [doc_id, label] : manifest.entries) {
        if (auto cached = load_cached_record(cache_dir, doc_id)) {
            if (cached->label != label)
                throw ValidationError("cached label for doc " + doc_id +
                                      " disagrees with the manifest; clear the cache");
            loaded.emplace(doc_id, std::move(*cached));
            ++sum.from_cache;
        } else {
            to_fetch.push_back(doc_id);
        }
    }

    if (!to_fetch.empty()) {
        endpoint.validate();
        std::unordered_map<std::string, int> label_of;
        for (const auto& [doc_id, label] : manifest.entries)
            label_of.emplace(doc_id, label);

        RateLimiter limiter(endpoint.rate_limit_per_sec);
        for (std::size_t start = 0; start < to_fetch.size(); start += endpoint.batch_size) {
            std::size_t stop = std::min(to_fetch.size(), start + endpoint.batch_size);
            std::vector<std::string> batch(to_fetch.begin() + start, to_fetch.begin() + stop);
            std::string id_list = join_ids(batch);

            std::string body;
            std::size_t attempt = 0;
            while (true) {
                try {
                    limiter.wait();
                    ++sum.api_calls;
                    body = fetch_batch_body(endpoint, id_list);
                    break;
                } catch (const FetchError& e) {
                    if (attempt >= endpoint.max_retries) {
                        append_fetch_log(cache_dir, id_list, std::string("error: ") + e.what());
                        throw;
                    }
                    std::size_t delay = endpoint.backoff_initial_ms << attempt;
                    std::this_thread::sleep_for(std::chrono::milliseconds(delay));
                    ++attempt;
                }
            }

            auto parsed = parse_tagged_response(body);
            std::unordered_map<std::string, const DocumentRecord*> by_id;
            for (const auto& r : parsed)
                by_id.emplace(r.doc_id, &r);

            std::size_t found = 0;
            for (const auto& doc_id : batch) {
                DocumentRecord record;
                record.doc_id = doc_id;
                record.label = label_of.at(doc_id);
                auto it = by_id.find(doc_id);
                if (it != by_id.end()) {
                    record.title = it->second->title;
                    record.abstract = it->second->abstract;
                    record.authors = it->second->authors;
                    record.journal = it->second->journal;
                    ++found;
                } else {
                    ++sum.missing;
                    sum.warnings.push_back("id " + doc_id + " not found at source");
                    append_fetch_log(cache_dir, doc_id, "missing");
                }
                store_record(cache_dir, record);
                loaded.emplace(doc_id, std::move(record));
                ++sum.fetched;
            }
            append_fetch_log(cache_dir, id_list,
                             "ok: " + std::to_string(found) + "/" + std::to_string(batch.size()));
        }
    }

    std::vector<DocumentRecord> records;
    records.reserve(manifest.entries.size());
    for (const auto& [doc_id, label] : manifest.entries)
        records.push_back(std::move(loaded.at(doc_id)));
    return records;
}

} // namespace screenbench::corpus
