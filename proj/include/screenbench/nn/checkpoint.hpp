#pragma once

#include <string>
#include <vector>

#include "screenbench/nn/tensor.hpp"

namespace screenbench::nn {

/// On-disk parameter layout: one UTF-8 text header line (model type and
/// config, '\n' terminated), then a 64-bit little-endian tensor count, then
/// per tensor its row and column counts as 64-bit little-endian integers
/// followed by the row-major payload as 64-bit little-endian floats.
struct Checkpoint {
    std::string header;
    std::vector<Tensor2D> tensors;
};

void write_checkpoint(const std::string& path, const Checkpoint& checkpoint);

Checkpoint read_checkpoint(const std::string& path);

} // namespace screenbench::nn
