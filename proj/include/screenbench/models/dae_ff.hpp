#pragma once

#include <array>
#include <unordered_set>

#include "screenbench/models/dae.hpp"
#include "screenbench/models/screener.hpp"
#include "screenbench/models/svm.hpp"
#include "screenbench/text/vocab.hpp"

namespace screenbench::models {

struct DaeFfConfig {
    std::size_t dae_hidden = 128;
    std::array<double, 3> corruption_levels{0.1, 0.3, 0.5};
    std::size_t dae_epochs = 20;
    std::size_t ff_hidden = 128;
    std::size_t ff_epochs = 20;
    double svm_C = 1e-6;
    std::size_t svm_epochs = 40;
    std::size_t batch_size = 32;
    std::size_t min_count = 2;  // vocabulary threshold for the BoW space
    corpus::FeatureView view = corpus::FeatureView::AllFeatures;
    std::unordered_set<std::string> stopwords;  // empty -> built-in list

    void validate() const;
};

/// Unsupervised feature extraction (three denoising autoencoders over binary
/// bag-of-words), a supervised feed-forward refinement, and a linear SVM
/// ranker on the extracted document vectors.
class DaeFfScreener : public Screener {
public:
    explicit DaeFfScreener(DaeFfConfig config);

    void train(const std::vector<corpus::DocumentRecord>& documents,
               const std::vector<int>& labels, const nn::TrainConfig& config) override;

    std::vector<eval::RankedPrediction> score(
        const std::vector<corpus::DocumentRecord>& documents) const override;

    std::string name() const override { return "dae-ff"; }

    /// Tokenize, drop stopwords, stem. Shared by train and score.
    std::vector<std::string> preprocess(const corpus::DocumentRecord& record) const;

    /// Concatenated DAE encodings passed through the feed-forward hidden
    /// layer; one row per document. Requires a trained model.
    nn::Tensor2D extract_features(const nn::Tensor2D& bow_matrix) const;

    const text::Vocabulary& vocabulary() const { return vocab_; }
    const std::vector<DaeResult>& autoencoders() const { return daes_; }
    const std::vector<double>& dae_epoch_losses(std::size_t which) const {
        return daes_.at(which).epoch_losses;
    }

    void save_checkpoint(const std::string& path) const;

private:
    nn::Tensor2D bow_rows(const std::vector<corpus::DocumentRecord>& documents) const;

    DaeFfConfig config_;
    text::Vocabulary vocab_;
    std::vector<DaeResult> daes_;   // ordered by corruption level position
    nn::DenseLayer ff_hidden_;
    LinearSvmModel svm_;
    bool trained_ = false;
};

} // namespace screenbench::models
