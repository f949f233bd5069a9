#include "screenbench/corpus/cache.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "screenbench/error.hpp"

namespace screenbench::corpus {

namespace {

namespace fs = std::filesystem;

// doc_ids are usually numeric source identifiers; anything unusual is
// percent-encoded so every id maps to a distinct, portable filename.
std::string sanitize_id(const std::string& doc_id) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(doc_id.size());
    for (unsigned char c : doc_id) {
        bool safe = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    c == '-' || c == '_' || c == '.';
        if (safe) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xf]);
        }
    }
    return out;
}

void write_tag(std::ostream& out, const char* tag, const std::string& value) {
    out << tag << "  - " << value << '\n';
}

} // namespace

std::string cache_file_path(const std::string& cache_dir, const std::string& doc_id) {
    return (fs::path(cache_dir) / (sanitize_id(doc_id) + ".txt")).string();
}

void store_record(const std::string& cache_dir, const DocumentRecord& record) {
    fs::create_directories(cache_dir);
    std::string path = cache_file_path(cache_dir, record.doc_id);
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw Error("cannot write cache file: " + path);
    write_tag(out, "ID", record.doc_id);
    write_tag(out, "TI", record.title);
    write_tag(out, "AB", record.abstract);
    write_tag(out, "AU", record.authors);
    write_tag(out, "JT", record.journal);
    write_tag(out, "LB", record.label == 1 ? "1" : "0");
    if (!out)
        throw Error("cache write failed: " + path);
}

std::optional<DocumentRecord> load_cached_record(const std::string& cache_dir,
                                                 const std::string& doc_id) {
    std::string path = cache_file_path(cache_dir, doc_id);
    std::ifstream in(path);
    if (!in)
        return std::nullopt;

    DocumentRecord record;
    record.doc_id = doc_id;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.size() < 6 || line.substr(2, 4) != "  - ")
            throw ParseError("malformed cache line", path, line_no);
        std::string tag = line.substr(0, 2);
        std::string value = line.substr(6);
        if (tag == "ID") {
            if (value != doc_id)
                throw ValidationError(path + ": cached id `" + value + "` does not match `" +
                                      doc_id + "`");
        } else if (tag == "TI") {
            record.title = value;
        } else if (tag == "AB") {
            record.abstract = value;
        } else if (tag == "AU") {
            record.authors = value;
        } else if (tag == "JT") {
            record.journal = value;
        } else if (tag == "LB") {
            if (value != "0" && value != "1")
                throw ParseError("label must be 0 or 1", path, line_no);
            record.label = value == "1" ? 1 : 0;
        } else {
            throw ParseError("unknown cache tag `" + tag + "`", path, line_no);
        }
    }
    return record;
}

void append_fetch_log(const std::string& cache_dir, const std::string& id_batch,
                      const std::string& status) {
    fs::create_directories(cache_dir);
    std::string path = (fs::path(cache_dir) / "fetch.log").string();
    std::ofstream out(path, std::ios::app);
    if (!out)
        throw Error("cannot append to fetch log: " + path);

    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    out << stamp << '\t' << id_batch << '\t' << status << '\n';
}

} // namespace screenbench::corpus
