#pragma once

#include <memory>
#include <string>
#include <vector>

#include "screenbench/corpus/record.hpp"
#include "screenbench/eval/metrics.hpp"
#include "screenbench/nn/optimizer.hpp"

namespace screenbench::models {

/// A ranking classifier for citation screening. train() fits the model on
/// labeled documents; score() assigns every document a relevance value,
/// higher meaning more likely eligible. Scoring is deterministic once
/// training completes, and instances are immutable (and shareable) after
/// train() returns.
class Screener {
public:
    virtual ~Screener() = default;

    virtual void train(const std::vector<corpus::DocumentRecord>& documents,
                       const std::vector<int>& labels, const nn::TrainConfig& config) = 0;

    virtual std::vector<eval::RankedPrediction> score(
        const std::vector<corpus::DocumentRecord>& documents) const = 0;

    virtual std::string name() const = 0;

    /// Mean training loss per epoch of the model's supervised stage; filled
    /// in by train().
    const std::vector<double>& epoch_losses() const { return epoch_losses_; }

protected:
    std::vector<double> epoch_losses_;
};

using ScreenerFactory = std::function<std::unique_ptr<Screener>()>;

/// Throws ValidationError unless both classes are present and every label is
/// 0 or 1.
void require_both_classes(const std::vector<int>& labels);

} // namespace screenbench::models
