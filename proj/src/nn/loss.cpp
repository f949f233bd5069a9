#include "screenbench/nn/loss.hpp"

#include <algorithm>
#include <cmath>

#include "screenbench/error.hpp"

namespace screenbench::nn {

double cross_entropy(const Tensor2D& probabilities, const Tensor2D& one_hot_targets) {
    check_same_shape(probabilities, one_hot_targets, "cross_entropy");
    if (probabilities.rows() == 0)
        throw ShapeError("cross_entropy: empty batch");
    double total = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        double t = one_hot_targets.data()[i];
        if (t != 0.0)
            total -= t * std::log(std::max(probabilities.data()[i], 1e-300));
    }
    return total / static_cast<double>(probabilities.rows());
}

Tensor2D cross_entropy_grad(const Tensor2D& probabilities, const Tensor2D& one_hot_targets) {
    check_same_shape(probabilities, one_hot_targets, "cross_entropy_grad");
    Tensor2D grad(probabilities.rows(), probabilities.cols());
    double inv_n = 1.0 / static_cast<double>(probabilities.rows());
    for (std::size_t i = 0; i < grad.size(); ++i) {
        double t = one_hot_targets.data()[i];
        if (t != 0.0)
            grad.data()[i] = -t / std::max(probabilities.data()[i], 1e-300) * inv_n;
    }
    return grad;
}

double sigmoid_cross_entropy(const Tensor2D& logits, const Tensor2D& binary_targets) {
    check_same_shape(logits, binary_targets, "sigmoid_cross_entropy");
    if (logits.rows() == 0)
        throw ShapeError("sigmoid_cross_entropy: empty batch");
    double total = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        double z = logits.data()[i];
        double t = binary_targets.data()[i];
        total += std::max(z, 0.0) - z * t + std::log1p(std::exp(-std::abs(z)));
    }
    return total / static_cast<double>(logits.rows());
}

Tensor2D sigmoid_cross_entropy_grad(const Tensor2D& logits, const Tensor2D& binary_targets) {
    check_same_shape(logits, binary_targets, "sigmoid_cross_entropy_grad");
    Tensor2D grad(logits.rows(), logits.cols());
    double inv_n = 1.0 / static_cast<double>(logits.rows());
    for (std::size_t i = 0; i < grad.size(); ++i) {
        double z = logits.data()[i];
        double s = z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
        grad.data()[i] = (s - binary_targets.data()[i]) * inv_n;
    }
    return grad;
}

double hinge(const std::vector<double>& margin_scores, const std::vector<int>& labels) {
    if (margin_scores.size() != labels.size())
        throw ShapeError("hinge: score/label count mismatch");
    if (margin_scores.empty())
        throw ShapeError("hinge: empty batch");
    double total = 0.0;
    for (std::size_t i = 0; i < margin_scores.size(); ++i)
        total += std::max(0.0, 1.0 - labels[i] * margin_scores[i]);
    return total / static_cast<double>(margin_scores.size());
}

} // namespace screenbench::nn
