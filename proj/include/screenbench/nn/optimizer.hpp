#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace screenbench::nn {

enum class OptimizerKind { SGD, Adam };

/// Shared knobs for every trainable model in the project.
struct TrainConfig {
    std::size_t epochs = 1;
    std::size_t batch_size = 32;
    double learning_rate = 1e-3;
    std::uint64_t seed = 0;
    OptimizerKind optimizer = OptimizerKind::Adam;

    void validate() const;
};

/// Per-parameter-block optimizer state. SGD keeps none; Adam keeps first and
/// second moment estimates plus the step counter.
class Optimizer {
public:
    Optimizer(OptimizerKind kind, double learning_rate);

    /// params -= update(grads). Both spans must stay the same length across
    /// calls for Adam state to make sense.
    void step(std::span<double> params, std::span<const double> grads);

    OptimizerKind kind() const { return kind_; }
    double learning_rate() const { return learning_rate_; }
    void set_learning_rate(double lr) { learning_rate_ = lr; }

private:
    OptimizerKind kind_;
    double learning_rate_;
    double beta1_ = 0.9;
    double beta2_ = 0.999;
    double epsilon_ = 1e-8;
    std::vector<double> m_;
    std::vector<double> v_;
    std::uint64_t t_ = 0;
};

} // namespace screenbench::nn
