#include "screenbench/eval/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "screenbench/error.hpp"

namespace screenbench::eval {

RankingEvaluation::RankingEvaluation(std::vector<RankedPrediction> predictions,
                                     const std::unordered_map<std::string, int>& labels)
    : ranked_(std::move(predictions)) {
    for (const auto& p : ranked_) {
        if (!std::isfinite(p.score))
            throw NumericError("RankingEvaluation: non-finite score for doc " + p.doc_id);
        if (!labels.contains(p.doc_id))
            throw ValidationError("RankingEvaluation: no label for doc " + p.doc_id);
    }
    std::sort(ranked_.begin(), ranked_.end(), [](const RankedPrediction& a,
                                                 const RankedPrediction& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
    ranked_labels_.reserve(ranked_.size());
    for (const auto& p : ranked_) {
        int label = labels.at(p.doc_id);
        if (label != 0 && label != 1)
            throw ValidationError("RankingEvaluation: label must be 0 or 1");
        ranked_labels_.push_back(label);
        n_included_ += label;
    }
}

namespace {

std::size_t required_positives(std::size_t n_included, double recall) {
    return static_cast<std::size_t>(std::ceil(recall * static_cast<double>(n_included)));
}

} // namespace

ConfusionAtThreshold threshold_at_recall(const RankingEvaluation& evaluation, double recall) {
    if (!(recall > 0.0) || recall > 1.0)
        throw ValidationError("threshold_at_recall: recall must lie in (0, 1]");
    if (evaluation.n_included() == 0)
        throw ValidationError("threshold_at_recall: metric undefined with zero positives");

    std::size_t needed = required_positives(evaluation.n_included(), recall);
    ConfusionAtThreshold confusion;
    std::size_t tp = 0;
    std::size_t cut = 0;
    const auto& labels = evaluation.ranked_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        tp += labels[i];
        if (tp >= needed) {
            cut = i + 1;
            break;
        }
    }
    confusion.cut_index = cut;
    confusion.tp = tp;
    confusion.fp = cut - tp;
    confusion.fn = evaluation.n_included() - tp;
    confusion.tn = evaluation.n_total() - evaluation.n_included() - confusion.fp;
    return confusion;
}

double wss_at_recall(const RankingEvaluation& evaluation, double recall) {
    ConfusionAtThreshold c = threshold_at_recall(evaluation, recall);
    return static_cast<double>(c.tn + c.fn) / static_cast<double>(evaluation.n_total()) -
           (1.0 - recall);
}

double max_wss_at_recall(std::size_t n_total, std::size_t n_included, double recall) {
    if (!(recall > 0.0) || recall > 1.0)
        throw ValidationError("max_wss_at_recall: recall must lie in (0, 1]");
    if (n_included == 0)
        throw ValidationError("max_wss_at_recall: metric undefined with zero positives");
    if (n_included > n_total)
        throw ValidationError("max_wss_at_recall: P exceeds N");
    std::size_t cut = required_positives(n_included, recall);
    return static_cast<double>(n_total - cut) / static_cast<double>(n_total) - (1.0 - recall);
}

double precision_at_recall(const RankingEvaluation& evaluation, double recall) {
    ConfusionAtThreshold c = threshold_at_recall(evaluation, recall);
    return static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
}

} // namespace screenbench::eval
