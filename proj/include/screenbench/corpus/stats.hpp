#pragma once

#include <cstddef>

#include "screenbench/corpus/manifest.hpp"

namespace screenbench::corpus {

/// Dataset-level summary in the shape of the benchmark's statistics table.
struct CorpusStats {
    std::size_t n_total = 0;
    std::size_t n_included = 0;
    double included_fraction = 0.0;
    double max_wss95 = 0.0;
};

CorpusStats compute_stats(const DatasetManifest& manifest);

} // namespace screenbench::corpus
