#pragma once

#include <vector>

#include <Eigen/Dense>

#include "tqp/errors.hpp"

namespace tqp {

// Scratch space reused across transforms; one per thread.
struct DctWorkspace {
    std::vector<double> tmp;
    std::vector<double> column;
};

// Orthonormal 2-D DCT-II for a fixed block size. Even sizes go through a
// fold recursion whose odd-index coefficients are built from exact pixel
// differences, so constant blocks produce exact zeros in every AC slot and
// integer-valued blocks keep their AC coefficients bit-identical under a
// constant offset. Odd sizes fall back to a direct cosine-table transform.
class DctPlan {
public:
    explicit DctPlan(int size);

    int size() const { return size_; }

    // In-place transform of a row-major size*size block.
    void forward_2d(double* block, DctWorkspace& ws) const;
    void forward_1d(double* data, DctWorkspace& ws) const;

private:
    void transform_recursive(double* data, double* scratch, int n, int level) const;
    void transform_direct(double* data, double* scratch, int n) const;

    int size_ = 0;
    std::vector<std::vector<double>> fold_factors_; // per level: 0.5 / cos(pi (2k+1) / (2m))
    std::vector<double> odd_cos_;                   // cos table for the odd base size, if any
    int odd_size_ = 0;
    std::vector<double> scale_;                     // orthonormal output scale
};

// Convenience entry points over Eigen matrices (square blocks only).
Eigen::MatrixXd dct2d(const Eigen::MatrixXd& block);
Eigen::MatrixXd idct2d(const Eigen::MatrixXd& coefficients);

} // namespace tqp
