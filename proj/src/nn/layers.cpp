#include "screenbench/nn/layers.hpp"

#include <algorithm>
#include <cmath>

#include "screenbench/error.hpp"

namespace screenbench::nn {

namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);
    return e / (1.0 + e);
}

void apply_activation(Activation act, Tensor2D& t) {
    switch (act) {
    case Activation::Identity:
        return;
    case Activation::ReLU:
        for (double& v : t.data())
            v = v > 0.0 ? v : 0.0;
        return;
    case Activation::Sigmoid:
        for (double& v : t.data())
            v = sigmoid(v);
        return;
    case Activation::Softmax:
        for (std::size_t i = 0; i < t.rows(); ++i) {
            double* row = t.row_ptr(i);
            double mx = *std::max_element(row, row + t.cols());
            double sum = 0.0;
            for (std::size_t j = 0; j < t.cols(); ++j) {
                row[j] = std::exp(row[j] - mx);
                sum += row[j];
            }
            for (std::size_t j = 0; j < t.cols(); ++j)
                row[j] /= sum;
        }
        return;
    }
}

// dLoss/dPreActivation from dLoss/dOutput, given pre-activation z and output y.
Tensor2D activation_backward(Activation act, const Tensor2D& pre, const Tensor2D& out,
                             const Tensor2D& upstream) {
    Tensor2D grad = upstream;
    switch (act) {
    case Activation::Identity:
        return grad;
    case Activation::ReLU:
        for (std::size_t i = 0; i < grad.size(); ++i)
            if (pre.data()[i] <= 0.0) grad.data()[i] = 0.0;
        return grad;
    case Activation::Sigmoid:
        for (std::size_t i = 0; i < grad.size(); ++i) {
            double y = out.data()[i];
            grad.data()[i] *= y * (1.0 - y);
        }
        return grad;
    case Activation::Softmax:
        // Row-wise Jacobian: dz_j = y_j * (g_j - sum_k g_k y_k).
        for (std::size_t i = 0; i < grad.rows(); ++i) {
            const double* y = out.row_ptr(i);
            double* g = grad.row_ptr(i);
            double dot = 0.0;
            for (std::size_t j = 0; j < grad.cols(); ++j)
                dot += g[j] * y[j];
            for (std::size_t j = 0; j < grad.cols(); ++j)
                g[j] = y[j] * (g[j] - dot);
        }
        return grad;
    }
    return grad;
}

} // namespace

std::string to_string(Activation a) {
    switch (a) {
    case Activation::Identity: return "identity";
    case Activation::ReLU: return "relu";
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Softmax: return "softmax";
    }
    return "?";
}

DenseLayer make_dense(std::size_t in_dim, std::size_t out_dim, Activation act, Rng& rng) {
    DenseLayer layer;
    layer.activation = act;
    layer.weights = Tensor2D(in_dim, out_dim);
    layer.bias.assign(out_dim, 0.0);
    double limit = std::sqrt(6.0 / static_cast<double>(in_dim + out_dim));
    for (double& w : layer.weights.data())
        w = rng.uniform(-limit, limit);
    return layer;
}

Tensor2D dense_forward(const DenseLayer& layer, const Tensor2D& input) {
    if (input.cols() != layer.in_dim())
        throw ShapeError("dense_forward: input cols " + std::to_string(input.cols()) +
                         " != in_dim " + std::to_string(layer.in_dim()));
    Tensor2D out = matmul(input, layer.weights);
    for (std::size_t i = 0; i < out.rows(); ++i) {
        double* row = out.row_ptr(i);
        for (std::size_t j = 0; j < out.cols(); ++j)
            row[j] += layer.bias[j];
    }
    apply_activation(layer.activation, out);
    return out;
}

DenseGrads dense_backward(const DenseLayer& layer, const Tensor2D& input,
                          const Tensor2D& upstream_grad) {
    if (input.cols() != layer.in_dim())
        throw ShapeError("dense_backward: input cols mismatch");
    if (upstream_grad.rows() != input.rows() || upstream_grad.cols() != layer.out_dim())
        throw ShapeError("dense_backward: upstream shape mismatch");

    // Recompute the forward pass; pre-activation and output drive the
    // activation derivative.
    Tensor2D pre = matmul(input, layer.weights);
    for (std::size_t i = 0; i < pre.rows(); ++i)
        for (std::size_t j = 0; j < pre.cols(); ++j)
            pre(i, j) += layer.bias[j];
    Tensor2D out = pre;
    apply_activation(layer.activation, out);

    Tensor2D dz = activation_backward(layer.activation, pre, out, upstream_grad);

    DenseGrads grads;
    grads.weight_grad = matmul(transpose(input), dz);
    grads.input_grad = matmul(dz, transpose(layer.weights));
    grads.bias_grad.assign(layer.out_dim(), 0.0);
    for (std::size_t i = 0; i < dz.rows(); ++i)
        for (std::size_t j = 0; j < dz.cols(); ++j)
            grads.bias_grad[j] += dz(i, j);
    return grads;
}

Conv1DLayer make_conv1d(std::size_t kernel_width, std::size_t in_channels, std::size_t filters,
                        Rng& rng) {
    Conv1DLayer layer;
    layer.kernel_width = kernel_width;
    layer.in_channels = in_channels;
    layer.filters = filters;
    std::size_t fan_in = kernel_width * in_channels;
    layer.weights = Tensor2D(fan_in, filters);
    layer.bias.assign(filters, 0.0);
    double limit = std::sqrt(6.0 / static_cast<double>(fan_in + filters));
    for (double& w : layer.weights.data())
        w = rng.uniform(-limit, limit);
    return layer;
}

Tensor2D conv1d_forward(const Conv1DLayer& layer, const Tensor2D& sequence) {
    if (sequence.cols() != layer.in_channels)
        throw ShapeError("conv1d_forward: channel mismatch");
    if (sequence.rows() < layer.kernel_width)
        throw ShapeError("conv1d_forward: sequence shorter than kernel width");

    std::size_t out_positions = sequence.rows() - layer.kernel_width + 1;
    Tensor2D out(out_positions, layer.filters);
    for (std::size_t t = 0; t < out_positions; ++t) {
        double* orow = out.row_ptr(t);
        for (std::size_t f = 0; f < layer.filters; ++f)
            orow[f] = layer.bias[f];
        // Window rows are contiguous; weights row (k*C + c) lines up with
        // sequence element (t+k, c).
        const double* window = sequence.row_ptr(t);
        for (std::size_t idx = 0; idx < layer.kernel_width * layer.in_channels; ++idx) {
            double x = window[idx];
            if (x == 0.0) continue;
            const double* wrow = layer.weights.row_ptr(idx);
            for (std::size_t f = 0; f < layer.filters; ++f)
                orow[f] += x * wrow[f];
        }
    }
    return out;
}

Conv1DGrads conv1d_backward(const Conv1DLayer& layer, const Tensor2D& sequence,
                            const Tensor2D& upstream_grad) {
    if (sequence.cols() != layer.in_channels)
        throw ShapeError("conv1d_backward: channel mismatch");
    std::size_t out_positions = sequence.rows() - layer.kernel_width + 1;
    if (upstream_grad.rows() != out_positions || upstream_grad.cols() != layer.filters)
        throw ShapeError("conv1d_backward: upstream shape mismatch");

    Conv1DGrads grads;
    grads.input_grad = Tensor2D(sequence.rows(), sequence.cols());
    grads.weight_grad = Tensor2D(layer.weights.rows(), layer.weights.cols());
    grads.bias_grad.assign(layer.filters, 0.0);

    for (std::size_t t = 0; t < out_positions; ++t) {
        const double* g = upstream_grad.row_ptr(t);
        for (std::size_t f = 0; f < layer.filters; ++f)
            grads.bias_grad[f] += g[f];
        const double* window = sequence.row_ptr(t);
        double* ig = grads.input_grad.row_ptr(t);
        for (std::size_t idx = 0; idx < layer.kernel_width * layer.in_channels; ++idx) {
            const double* wrow = layer.weights.row_ptr(idx);
            double* wg = grads.weight_grad.row_ptr(idx);
            double x = window[idx];
            double acc = 0.0;
            for (std::size_t f = 0; f < layer.filters; ++f) {
                wg[f] += x * g[f];
                acc += wrow[f] * g[f];
            }
            ig[idx] += acc;
        }
    }
    return grads;
}

MaxPoolResult global_max_pool(const Tensor2D& feature_map) {
    if (feature_map.rows() == 0 || feature_map.cols() == 0)
        throw ShapeError("global_max_pool: empty feature map");
    MaxPoolResult result;
    result.pooled.assign(feature_map.cols(), 0.0);
    result.argmax_rows.assign(feature_map.cols(), 0);
    for (std::size_t c = 0; c < feature_map.cols(); ++c) {
        double best = feature_map(0, c);
        std::size_t best_row = 0;
        for (std::size_t r = 1; r < feature_map.rows(); ++r) {
            if (feature_map(r, c) > best) {
                best = feature_map(r, c);
                best_row = r;
            }
        }
        result.pooled[c] = best;
        result.argmax_rows[c] = best_row;
    }
    return result;
}

Tensor2D global_max_pool_backward(std::size_t rows, std::size_t cols,
                                  const std::vector<std::size_t>& argmax_rows,
                                  const std::vector<double>& upstream_grad) {
    if (argmax_rows.size() != cols || upstream_grad.size() != cols)
        throw ShapeError("global_max_pool_backward: size mismatch");
    Tensor2D grad(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        grad(argmax_rows[c], c) = upstream_grad[c];
    return grad;
}

Tensor2D relu(const Tensor2D& input) {
    Tensor2D out = input;
    for (double& v : out.data())
        v = v > 0.0 ? v : 0.0;
    return out;
}

Tensor2D relu_backward(const Tensor2D& input, const Tensor2D& upstream_grad) {
    check_same_shape(input, upstream_grad, "relu_backward");
    Tensor2D grad = upstream_grad;
    for (std::size_t i = 0; i < grad.size(); ++i)
        if (input.data()[i] <= 0.0) grad.data()[i] = 0.0;
    return grad;
}

Tensor2D dropout_forward(const Tensor2D& input, double rate, Rng& rng, Tensor2D* mask) {
    if (rate < 0.0 || rate >= 1.0)
        throw ValidationError("dropout rate must lie in [0, 1)");
    Tensor2D out = input;
    Tensor2D m(input.rows(), input.cols(), 1.0);
    if (rate > 0.0) {
        double scale = 1.0 / (1.0 - rate);
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (rng.uniform01() < rate) {
                m.data()[i] = 0.0;
                out.data()[i] = 0.0;
            } else {
                m.data()[i] = scale;
                out.data()[i] *= scale;
            }
        }
    }
    if (mask) *mask = std::move(m);
    return out;
}

} // namespace screenbench::nn
