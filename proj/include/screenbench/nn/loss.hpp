#pragma once

#include <vector>

#include "screenbench/nn/tensor.hpp"

namespace screenbench::nn {

/// Mean over rows of -sum_j targets(i,j) * log(probabilities(i,j)).
/// Probabilities must already sum to one per row (e.g. softmax output).
double cross_entropy(const Tensor2D& probabilities, const Tensor2D& one_hot_targets);

/// dLoss/dProbabilities for cross_entropy.
Tensor2D cross_entropy_grad(const Tensor2D& probabilities, const Tensor2D& one_hot_targets);

/// Mean over rows of sum_j [max(z,0) - z*t + log(1 + exp(-|z|))], the
/// numerically stable element-wise sigmoid cross-entropy on logits.
double sigmoid_cross_entropy(const Tensor2D& logits, const Tensor2D& binary_targets);

/// dLoss/dLogits for sigmoid_cross_entropy: (sigmoid(z) - t) / rows.
Tensor2D sigmoid_cross_entropy_grad(const Tensor2D& logits, const Tensor2D& binary_targets);

/// mean(max(0, 1 - y*s)) over all entries; labels are +-1.
double hinge(const std::vector<double>& margin_scores, const std::vector<int>& labels);

} // namespace screenbench::nn
