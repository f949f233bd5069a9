#include "screenbench/nn/optimizer.hpp"

#include <cmath>

#include "screenbench/error.hpp"

namespace screenbench::nn {

void TrainConfig::validate() const {
    if (epochs < 1)
        throw ValidationError("TrainConfig: epochs must be >= 1");
    if (batch_size < 1)
        throw ValidationError("TrainConfig: batch_size must be >= 1");
    if (!(learning_rate > 0.0))
        throw ValidationError("TrainConfig: learning_rate must be > 0");
}

Optimizer::Optimizer(OptimizerKind kind, double learning_rate)
    : kind_(kind), learning_rate_(learning_rate) {
    if (!(learning_rate > 0.0))
        throw ValidationError("Optimizer: learning_rate must be > 0");
}

void Optimizer::step(std::span<double> params, std::span<const double> grads) {
    if (params.size() != grads.size())
        throw ShapeError("Optimizer::step: param/grad size mismatch");

    if (kind_ == OptimizerKind::SGD) {
        for (std::size_t i = 0; i < params.size(); ++i)
            params[i] -= learning_rate_ * grads[i];
        return;
    }

    if (m_.empty()) {
        m_.assign(params.size(), 0.0);
        v_.assign(params.size(), 0.0);
    } else if (m_.size() != params.size()) {
        throw ShapeError("Optimizer::step: parameter count changed between steps");
    }
    ++t_;
    double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); ++i) {
        double g = grads[i];
        m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * g;
        v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * g * g;
        double mhat = m_[i] / bc1;
        double vhat = v_[i] / bc2;
        params[i] -= learning_rate_ * mhat / (std::sqrt(vhat) + epsilon_);
    }
}

} // namespace screenbench::nn
