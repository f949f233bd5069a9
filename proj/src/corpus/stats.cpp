#include "screenbench/corpus/stats.hpp"

#include "screenbench/error.hpp"
#include "screenbench/eval/metrics.hpp"

namespace screenbench::corpus {

CorpusStats compute_stats(const DatasetManifest& manifest) {
    if (manifest.entries.empty())
        throw ValidationError("compute_stats: empty manifest");
    CorpusStats stats;
    stats.n_total = manifest.total();
    stats.n_included = manifest.included();
    stats.included_fraction =
        static_cast<double>(stats.n_included) / static_cast<double>(stats.n_total);
    stats.max_wss95 = eval::max_wss_at_recall(stats.n_total, stats.n_included, 0.95);
    return stats;
}

} // namespace screenbench::corpus
