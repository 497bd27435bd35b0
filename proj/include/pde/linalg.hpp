#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "pde/common.hpp"

namespace pde {

// Orthonormal basis of the column space of A (columns with singular value
// above tol * largest).
inline Mat column_space(const Mat& A, double tol = 1e-10) {
    if (A.cols() == 0) return Mat::Zero(A.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU);
    double cutoff = tol * std::max(1.0, svd.singularValues()[0]);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > cutoff) ++rank;
    return svd.matrixU().leftCols(rank);
}

// Intersection of the column spaces of two orthonormal bases, via principal
// angles: singular values of A^T B equal to 1 mark common directions.
inline Mat subspace_intersection(const Mat& A, const Mat& B, double tol = 1e-7) {
    if (A.cols() == 0 || B.cols() == 0) return Mat::Zero(A.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(A.transpose() * B, Eigen::ComputeFullU);
    int count = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 1.0 - tol) ++count;
    if (count == 0) return Mat::Zero(A.rows(), 0);
    Mat dirs = A * svd.matrixU().leftCols(count);
    return column_space(dirs);
}

// Minimum-norm least-squares solve with singular values truncated at
// rel_tol * sigma_max.
inline Vec min_norm_solve(const Mat& A, const Vec& b, double rel_tol = 1e-12) {
    Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double cutoff = rel_tol * svd.singularValues()[0];
    Vec y = svd.matrixU().transpose() * b;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        y[i] = svd.singularValues()[i] > cutoff ? y[i] / svd.singularValues()[i] : 0.0;
    return svd.matrixV() * y;
}

}  // namespace pde
