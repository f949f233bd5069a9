#pragma once

#include <cstdint>
#include <vector>

#include "screenbench/nn/tensor.hpp"

namespace screenbench::models {

/// Linear decision function score = w . x + b.
struct LinearSvmModel {
    std::vector<double> weights;
    double bias = 0.0;

    double decision_value(const double* x, std::size_t dim) const;
};

struct LinearSvmOptions {
    double C = 1e-6;          // hinge weight in (1/2)||w||^2 + C * sum hinge
    std::size_t epochs = 40;  // passes over the data
    std::uint64_t seed = 0;
};

/// Primal subgradient training with the step schedule eta_t = 1/(lambda t),
/// lambda = 1/(C n), and deterministic seeded shuffling. Labels are +-1.
LinearSvmModel train_linear_svm(const nn::Tensor2D& features, const std::vector<int>& labels,
                                const LinearSvmOptions& options);

} // namespace screenbench::models
