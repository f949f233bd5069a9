#pragma once

#include <functional>
#include <span>

namespace screenbench::nn {

struct GradCheckReport {
    double max_relative_error = 0.0;
    std::size_t parameter_count = 0;
    double epsilon = 0.0;
};

/// Compares an analytic gradient against central finite differences of the
/// loss closure. The closure is evaluated at perturbed parameter vectors;
/// params is restored before returning. Relative error per parameter is
/// |ga - gn| / max(|ga|, |gn|, 1e-12).
GradCheckReport gradient_check(const std::function<double()>& loss, std::span<double> params,
                               std::span<const double> analytic_grad, double epsilon = 1e-5);

} // namespace screenbench::nn
