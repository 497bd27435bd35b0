#pragma once

#include "pde/common.hpp"

namespace pde {

// Eigendecomposition of a symmetric matrix, eigenvalues ascending,
// eigenvectors orthonormal in the columns of `vectors`.
struct Spectrum {
    Vec values;
    Mat vectors;

    int size() const { return static_cast<int>(values.size()); }
};

// Dense symmetric eigensolve. Throws numeric_error if the iteration fails
// or the residual check ||A v - lambda v|| exceeds tolerance.
Spectrum symmetric_eigen(const Mat& A);

}  // namespace pde
