#include "screenbench/nn/gradcheck.hpp"

#include <algorithm>
#include <cmath>

#include "screenbench/error.hpp"

namespace screenbench::nn {

GradCheckReport gradient_check(const std::function<double()>& loss, std::span<double> params,
                               std::span<const double> analytic_grad, double epsilon) {
    if (params.size() != analytic_grad.size())
        throw ShapeError("gradient_check: param/grad size mismatch");

    GradCheckReport report;
    report.parameter_count = params.size();
    report.epsilon = epsilon;

    for (std::size_t i = 0; i < params.size(); ++i) {
        double original = params[i];
        params[i] = original + epsilon;
        double up = loss();
        params[i] = original - epsilon;
        double down = loss();
        params[i] = original;
        if (!std::isfinite(up) || !std::isfinite(down))
            throw NumericError("gradient_check: non-finite loss at perturbed point");
        double numeric = (up - down) / (2.0 * epsilon);
        double analytic = analytic_grad[i];
        double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-12});
        double rel = std::abs(analytic - numeric) / denom;
        report.max_relative_error = std::max(report.max_relative_error, rel);
    }
    return report;
}

} // namespace screenbench::nn
