#include "tqp/dct.hpp"

#include <cmath>
#include <numbers>

namespace tqp {

namespace {

Eigen::MatrixXd orthonormal_basis(int n) {
    Eigen::MatrixXd basis(n, n);
    const double scale0 = std::sqrt(1.0 / n);
    const double scalek = std::sqrt(2.0 / n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            basis(k, j) = (k == 0 ? scale0 : scalek)
                          * std::cos(std::numbers::pi * (2 * j + 1) * k / (2.0 * n));
    return basis;
}

} // namespace

DctPlan::DctPlan(int size) : size_(size) {
    if (size < 1)
        throw InvalidArgument("DCT block size must be at least 1");

    int m = size;
    while (m > 1 && m % 2 == 0) {
        const int half = m / 2;
        std::vector<double> factors(half);
        for (int k = 0; k < half; ++k)
            factors[k] = 0.5 / std::cos(std::numbers::pi * (2 * k + 1) / (2.0 * m));
        fold_factors_.push_back(std::move(factors));
        m = half;
    }
    if (m > 1) {
        odd_size_ = m;
        odd_cos_.resize(static_cast<std::size_t>(4) * m);
        for (int a = 0; a < 4 * m; ++a)
            odd_cos_[a] = std::cos(std::numbers::pi * a / (2.0 * m));
    }

    scale_.resize(size);
    scale_[0] = std::sqrt(1.0 / size);
    for (int k = 1; k < size; ++k)
        scale_[k] = std::sqrt(2.0 / size);
}

void DctPlan::transform_direct(double* data, double* scratch, int n) const {
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += data[j] * odd_cos_[static_cast<std::size_t>((2 * j + 1) * k % (4 * n))];
        scratch[k] = acc;
    }
    for (int k = 0; k < n; ++k)
        data[k] = scratch[k];
}

void DctPlan::transform_recursive(double* data, double* scratch, int n, int level) const {
    if (n == 1)
        return;
    if (n % 2 != 0) {
        transform_direct(data, scratch, n);
        return;
    }

    const int half = n / 2;
    const std::vector<double>& factors = fold_factors_[static_cast<std::size_t>(level)];
    for (int k = 0; k < half; ++k) {
        const double a = data[k];
        const double b = data[n - 1 - k];
        scratch[k] = a + b;
        scratch[half + k] = (a - b) * factors[k];
    }
    transform_recursive(scratch, data, half, level + 1);
    transform_recursive(scratch + half, data, half, level + 1);

    for (int k = 0; k < half; ++k)
        data[2 * k] = scratch[k];
    for (int k = 0; k + 1 < half; ++k)
        data[2 * k + 1] = scratch[half + k] + scratch[half + k + 1];
    data[n - 1] = scratch[n - 1];
}

void DctPlan::forward_1d(double* data, DctWorkspace& ws) const {
    if (ws.tmp.size() < static_cast<std::size_t>(size_))
        ws.tmp.resize(size_);
    transform_recursive(data, ws.tmp.data(), size_, 0);
    for (int k = 0; k < size_; ++k)
        data[k] *= scale_[k];
}

void DctPlan::forward_2d(double* block, DctWorkspace& ws) const {
    const int n = size_;
    for (int row = 0; row < n; ++row)
        forward_1d(block + static_cast<std::size_t>(row) * n, ws);

    if (ws.column.size() < static_cast<std::size_t>(n))
        ws.column.resize(n);
    for (int col = 0; col < n; ++col) {
        for (int row = 0; row < n; ++row)
            ws.column[row] = block[static_cast<std::size_t>(row) * n + col];
        forward_1d(ws.column.data(), ws);
        for (int row = 0; row < n; ++row)
            block[static_cast<std::size_t>(row) * n + col] = ws.column[row];
    }
}

Eigen::MatrixXd dct2d(const Eigen::MatrixXd& block) {
    if (block.rows() != block.cols())
        throw InvalidArgument("DCT input must be square, got " + std::to_string(block.rows()) + "x"
                              + std::to_string(block.cols()));
    const int n = static_cast<int>(block.rows());
    DctPlan plan(n);
    DctWorkspace ws;
    std::vector<double> buffer(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            buffer[static_cast<std::size_t>(r) * n + c] = block(r, c);
    plan.forward_2d(buffer.data(), ws);
    Eigen::MatrixXd out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out(r, c) = buffer[static_cast<std::size_t>(r) * n + c];
    return out;
}

Eigen::MatrixXd idct2d(const Eigen::MatrixXd& coefficients) {
    if (coefficients.rows() != coefficients.cols())
        throw InvalidArgument("inverse DCT input must be square");
    const int n = static_cast<int>(coefficients.rows());
    const Eigen::MatrixXd basis = orthonormal_basis(n);
    return basis.transpose() * coefficients * basis;
}

} // namespace tqp
