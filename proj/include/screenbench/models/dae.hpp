#pragma once

#include <cstdint>
#include <vector>

#include "screenbench/nn/layers.hpp"
#include "screenbench/nn/optimizer.hpp"
#include "screenbench/nn/tensor.hpp"

namespace screenbench::models {

/// A trained denoising autoencoder, reduced to the piece later stages use:
/// the encoder (bag-of-words -> hidden, sigmoid) plus the training trace.
struct DaeResult {
    nn::DenseLayer encoder;
    std::vector<double> epoch_losses;  // mean reconstruction loss per epoch
};

/// Zero-masks each entry of `rows` independently with the given probability.
/// Exposed separately so the corruption statistics are testable.
nn::Tensor2D corrupt_rows(const nn::Tensor2D& rows, double corruption, nn::Rng& rng);

/// Trains one denoising autoencoder on binary bag-of-words rows. A fresh
/// corruption mask is drawn every epoch; the objective is the sigmoid
/// cross-entropy between the reconstruction logits and the uncorrupted
/// input.
DaeResult train_dae(const nn::Tensor2D& bow_matrix, double corruption, std::size_t hidden_dim,
                    const nn::TrainConfig& config);

} // namespace screenbench::models
