#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace screenbench::nn {

/// Dense row-major matrix of doubles. The only tensor type in the project;
/// vectors are 1xN or handled as std::vector<double>.
class Tensor2D {
public:
    Tensor2D() = default;
    Tensor2D(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Tensor2D from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// a (m x k) times b (k x n). Throws ShapeError on inner-dimension mismatch.
Tensor2D matmul(const Tensor2D& a, const Tensor2D& b);

Tensor2D transpose(const Tensor2D& t);

/// Throws ShapeError unless both tensors have identical shape.
void check_same_shape(const Tensor2D& a, const Tensor2D& b, const char* what);

} // namespace screenbench::nn
