#pragma once

#include <vector>

#include "spdmean/matrix.hpp"

namespace spdmean {

// Eigendecomposition of a symmetric matrix.  Eigenvalues ascending,
// eigenvectors stored as the columns of `vectors` (orthonormal).
struct Spectrum {
    std::vector<double> values;
    Matrix vectors;
};

// Cyclic Jacobi eigensolver for dense symmetric matrices.
//
// Sweeps row-cyclically over the strict upper triangle, annihilating each
// off-diagonal entry with a two-sided rotation, until the off-diagonal
// Frobenius norm drops below 1e-13 relative to the matrix Frobenius norm.
// Capped at 30 sweeps; hitting the cap throws ConvergenceError, which cannot
// happen for finite symmetric input.
//
// The input is assumed symmetric; only the upper triangle is referenced.
Spectrum jacobi_eigen(const Matrix& a);

// Eigenvalues only (no rotation accumulation), ascending.
std::vector<double> jacobi_eigenvalues(const Matrix& a);

}  // namespace spdmean
