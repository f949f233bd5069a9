#include "screenbench/nn/tensor.hpp"

#include <cmath>
#include <string>

#include "screenbench/error.hpp"

namespace screenbench::nn {

Tensor2D::Tensor2D(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Tensor2D Tensor2D::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Tensor2D t;
    t.rows_ = rows.size();
    t.cols_ = rows.size() ? rows.begin()->size() : 0;
    t.data_.reserve(t.rows_ * t.cols_);
    for (const auto& row : rows) {
        if (row.size() != t.cols_)
            throw ShapeError("from_rows: ragged initializer");
        t.data_.insert(t.data_.end(), row.begin(), row.end());
    }
    return t;
}

bool Tensor2D::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Tensor2D matmul(const Tensor2D& a, const Tensor2D& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Tensor2D out(a.rows(), b.cols());
    // i-k-j loop order keeps the inner loop contiguous in both b and out.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row_ptr(i);
        double* orow = out.row_ptr(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                orow[j] += aik * brow[j];
        }
    }
    return out;
}

Tensor2D transpose(const Tensor2D& t) {
    Tensor2D out(t.cols(), t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            out(j, i) = t(i, j);
    return out;
}

void check_same_shape(const Tensor2D& a, const Tensor2D& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

} // namespace screenbench::nn
