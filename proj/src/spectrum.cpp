#include "pde/spectrum.hpp"

#include <Eigen/Eigenvalues>

namespace pde {

Spectrum symmetric_eigen(const Mat& A) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(A);
    if (solver.info() != Eigen::Success)
        throw numeric_error("symmetric eigensolver failed to converge");
    Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
    // Residual check, relative to max(1, |lambda|).
    double worst = 0.0;
    for (int j = 0; j < s.size(); ++j) {
        double r = (A * s.vectors.col(j) - s.values[j] * s.vectors.col(j)).norm();
        worst = std::max(worst, r / std::max(1.0, std::abs(s.values[j])));
    }
    if (worst > 1e-10)
        throw numeric_error("eigensolver residual " + std::to_string(worst) + " exceeds 1e-10");
    return s;
}

}  // namespace pde
