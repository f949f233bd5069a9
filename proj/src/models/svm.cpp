#include "screenbench/models/svm.hpp"

#include <cmath>
#include <numeric>

#include "screenbench/error.hpp"
#include "screenbench/nn/rng.hpp"

namespace screenbench::models {

double LinearSvmModel::decision_value(const double* x, std::size_t dim) const {
    double s = bias;
    for (std::size_t i = 0; i < dim; ++i)
        s += weights[i] * x[i];
    return s;
}

LinearSvmModel train_linear_svm(const nn::Tensor2D& features, const std::vector<int>& labels,
                                const LinearSvmOptions& options) {
    std::size_t n = features.rows();
    std::size_t dim = features.cols();
    if (n == 0 || dim == 0)
        throw ValidationError("train_linear_svm: empty feature matrix");
    if (labels.size() != n)
        throw ShapeError("train_linear_svm: label count mismatch");
    bool has_pos = false, has_neg = false;
    for (int y : labels) {
        if (y == 1) has_pos = true;
        else if (y == -1) has_neg = true;
        else throw ValidationError("train_linear_svm: labels must be +-1");
    }
    if (!has_pos || !has_neg)
        throw ValidationError("train_linear_svm: both classes required");
    if (!(options.C > 0.0))
        throw ValidationError("train_linear_svm: C must be > 0");

    // Equivalent objective (lambda/2)||w||^2 + (1/n) sum hinge with
    // lambda = 1/(C n); same minimizer as (1/2)||w||^2 + C sum hinge.
    double lambda = 1.0 / (options.C * static_cast<double>(n));
    double radius = 1.0 / std::sqrt(lambda);

    LinearSvmModel model;
    model.weights.assign(dim, 0.0);

    nn::Rng rng(options.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::size_t t = 0;
    for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t i : order) {
            ++t;
            double eta = 1.0 / (lambda * static_cast<double>(t));
            const double* x = features.row_ptr(i);
            double y = labels[i];
            double margin = y * model.decision_value(x, dim);

            double shrink = 1.0 - eta * lambda;
            for (double& w : model.weights)
                w *= shrink;
            if (margin < 1.0) {
                for (std::size_t d = 0; d < dim; ++d)
                    model.weights[d] += eta * y * x[d];
                model.bias += eta * y;
            }
            // Projection onto the ball that contains the optimum.
            double norm_sq = 0.0;
            for (double w : model.weights)
                norm_sq += w * w;
            if (norm_sq > radius * radius) {
                double factor = radius / std::sqrt(norm_sq);
                for (double& w : model.weights)
                    w *= factor;
            }
        }
    }
    return model;
}

} // namespace screenbench::models
