#include "screenbench/models/dae.hpp"

#include <numeric>

#include "screenbench/error.hpp"
#include "screenbench/nn/loss.hpp"

namespace screenbench::models {

nn::Tensor2D corrupt_rows(const nn::Tensor2D& rows, double corruption, nn::Rng& rng) {
    if (corruption < 0.0 || corruption >= 1.0)
        throw ValidationError("corruption must lie in [0, 1)");
    nn::Tensor2D out = rows;
    if (corruption > 0.0)
        for (double& v : out.data())
            if (rng.uniform01() < corruption)
                v = 0.0;
    return out;
}

DaeResult train_dae(const nn::Tensor2D& bow_matrix, double corruption, std::size_t hidden_dim,
                    const nn::TrainConfig& config) {
    if (bow_matrix.rows() == 0 || bow_matrix.cols() == 0)
        throw ValidationError("train_dae: empty input matrix");
    config.validate();

    std::size_t dim = bow_matrix.cols();
    nn::Rng rng(config.seed);
    nn::DenseLayer encoder = nn::make_dense(dim, hidden_dim, nn::Activation::Sigmoid, rng);
    nn::DenseLayer decoder = nn::make_dense(hidden_dim, dim, nn::Activation::Identity, rng);
    nn::Optimizer enc_w(config.optimizer, config.learning_rate);
    nn::Optimizer enc_b(config.optimizer, config.learning_rate);
    nn::Optimizer dec_w(config.optimizer, config.learning_rate);
    nn::Optimizer dec_b(config.optimizer, config.learning_rate);

    std::vector<std::size_t> order(bow_matrix.rows());
    std::iota(order.begin(), order.end(), 0);

    DaeResult result;
    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        rng.shuffle(order);
        double epoch_loss = 0.0;
        std::size_t batches = 0;
        for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
            std::size_t stop = std::min(order.size(), start + config.batch_size);
            nn::Tensor2D clean(stop - start, dim);
            for (std::size_t r = start; r < stop; ++r)
                for (std::size_t c = 0; c < dim; ++c)
                    clean(r - start, c) = bow_matrix(order[r], c);

            nn::Tensor2D noisy = corrupt_rows(clean, corruption, rng);
            nn::Tensor2D hidden = nn::dense_forward(encoder, noisy);
            nn::Tensor2D logits = nn::dense_forward(decoder, hidden);

            epoch_loss += nn::sigmoid_cross_entropy(logits, clean);
            ++batches;

            nn::Tensor2D dlogits = nn::sigmoid_cross_entropy_grad(logits, clean);
            nn::DenseGrads dec_grads = nn::dense_backward(decoder, hidden, dlogits);
            nn::DenseGrads enc_grads = nn::dense_backward(encoder, noisy, dec_grads.input_grad);

            dec_w.step(decoder.weights.data(), dec_grads.weight_grad.data());
            dec_b.step(decoder.bias, dec_grads.bias_grad);
            enc_w.step(encoder.weights.data(), enc_grads.weight_grad.data());
            enc_b.step(encoder.bias, enc_grads.bias_grad);
        }
        result.epoch_losses.push_back(epoch_loss / static_cast<double>(batches));
    }
    result.encoder = std::move(encoder);
    return result;
}

} // namespace screenbench::models
