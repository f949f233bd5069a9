#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace screenbench::eval {

/// (document id, relevance score) pair; higher score means more likely
/// eligible.
struct RankedPrediction {
    std::string doc_id;
    double score = 0.0;
};

/// A scored test set ready for metric computation. Construction sorts the
/// predictions by score descending, breaking ties by doc_id ascending, and
/// counts the positives.
class RankingEvaluation {
public:
    RankingEvaluation(std::vector<RankedPrediction> predictions,
                      const std::unordered_map<std::string, int>& labels);

    const std::vector<RankedPrediction>& ranked() const { return ranked_; }
    const std::vector<int>& ranked_labels() const { return ranked_labels_; }
    std::size_t n_total() const { return ranked_.size(); }
    std::size_t n_included() const { return n_included_; }

private:
    std::vector<RankedPrediction> ranked_;
    std::vector<int> ranked_labels_;
    std::size_t n_included_ = 0;
};

/// Confusion counts after "reading" the top cut_index documents of the
/// ranking and screening out the rest.
struct ConfusionAtThreshold {
    std::size_t cut_index = 0;
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;
};

/// Smallest ranking prefix whose true positives reach ceil(r * P).
/// Throws ValidationError when recall is out of (0, 1] or P is zero.
ConfusionAtThreshold threshold_at_recall(const RankingEvaluation& evaluation, double recall);

/// (TN + FN) / N - (1 - r) at the threshold_at_recall cut.
double wss_at_recall(const RankingEvaluation& evaluation, double recall);

/// WSS of a perfect ranking: (N - ceil(r * P)) / N - (1 - r).
double max_wss_at_recall(std::size_t n_total, std::size_t n_included, double recall);

/// TP / (TP + FP) at the threshold_at_recall cut.
double precision_at_recall(const RankingEvaluation& evaluation, double recall);

} // namespace screenbench::eval
