#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "screenbench/nn/rng.hpp"
#include "screenbench/nn/tensor.hpp"

namespace screenbench::nn {

enum class Activation { Identity, ReLU, Sigmoid, Softmax };

std::string to_string(Activation a);

/// Fully connected layer: output = activation(input * weights + bias).
struct DenseLayer {
    Tensor2D weights;          // in_dim x out_dim
    std::vector<double> bias;  // out_dim
    Activation activation = Activation::Identity;

    std::size_t in_dim() const { return weights.rows(); }
    std::size_t out_dim() const { return weights.cols(); }
};

/// Glorot-uniform weights, zero bias.
DenseLayer make_dense(std::size_t in_dim, std::size_t out_dim, Activation act, Rng& rng);

Tensor2D dense_forward(const DenseLayer& layer, const Tensor2D& input);

struct DenseGrads {
    Tensor2D input_grad;       // same shape as input
    Tensor2D weight_grad;      // in_dim x out_dim
    std::vector<double> bias_grad;
};

/// Analytic gradients of dense_forward. upstream_grad is dLoss/dOutput.
DenseGrads dense_backward(const DenseLayer& layer, const Tensor2D& input,
                          const Tensor2D& upstream_grad);

/// Valid (no padding) 1-D convolution over a positions x in_channels sequence.
struct Conv1DLayer {
    std::size_t kernel_width = 1;
    std::size_t in_channels = 1;
    std::size_t filters = 1;
    Tensor2D weights;          // (kernel_width * in_channels) x filters
    std::vector<double> bias;  // filters
};

Conv1DLayer make_conv1d(std::size_t kernel_width, std::size_t in_channels, std::size_t filters,
                        Rng& rng);

/// Output has (positions - kernel_width + 1) rows and `filters` columns.
/// No activation is applied.
Tensor2D conv1d_forward(const Conv1DLayer& layer, const Tensor2D& sequence);

struct Conv1DGrads {
    Tensor2D input_grad;
    Tensor2D weight_grad;
    std::vector<double> bias_grad;
};

Conv1DGrads conv1d_backward(const Conv1DLayer& layer, const Tensor2D& sequence,
                            const Tensor2D& upstream_grad);

struct MaxPoolResult {
    std::vector<double> pooled;            // one value per column
    std::vector<std::size_t> argmax_rows;  // ties resolved to the lowest row
};

/// Per-column maximum over all rows.
MaxPoolResult global_max_pool(const Tensor2D& feature_map);

/// Routes the upstream gradient (one value per column) back to the argmax rows.
Tensor2D global_max_pool_backward(std::size_t rows, std::size_t cols,
                                  const std::vector<std::size_t>& argmax_rows,
                                  const std::vector<double>& upstream_grad);

Tensor2D relu(const Tensor2D& input);

/// dLoss/dInput for y = relu(x): passes upstream where x > 0.
Tensor2D relu_backward(const Tensor2D& input, const Tensor2D& upstream_grad);

/// Inverted dropout: kept entries are scaled by 1/(1-rate) so inference needs
/// no rescaling. Returns the applied mask (0 or 1/(1-rate)) via *mask.
Tensor2D dropout_forward(const Tensor2D& input, double rate, Rng& rng, Tensor2D* mask);

} // namespace screenbench::nn
