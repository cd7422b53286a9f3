#pragma once

#include <cstddef>
#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

// Result of diagonalizing a symmetric matrix: eigenvalues sorted descending,
// column k of `vectors` the unit eigenvector for values[k]. Columns are
// orthonormal; each column's largest-magnitude entry is positive (earliest
// such entry on ties). Within a repeated eigenvalue the individual vectors
// are an arbitrary orthonormal basis of the eigenspace.
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;

    EigenDecomposition(std::vector<double> vals, Matrix vecs)
        : values(std::move(vals)), vectors(std::move(vecs)) {}
};

struct JacobiOptions {
    int max_sweeps = 100;
    // Converged when the off-diagonal Frobenius norm drops below
    // off_tol_factor * ||S||_F.
    double off_tol_factor = 1e-12;
    // Inputs asymmetric beyond asym_tol_factor * max(1, ||S||_F) are
    // rejected; smaller asymmetry is silently averaged away.
    double asym_tol_factor = 1e-9;
};

// Cyclic Jacobi. Throws ShapeError (non-square), SymmetryError (asymmetry
// beyond tolerance), or ConvergenceError (sweep budget exhausted, with the
// residual reached). Deterministic: fixed sweep order and accumulation order.
EigenDecomposition symmetric_eigen(const Matrix& s, const JacobiOptions& opts = {});

// sum_{k<r} values[k] * v_k v_k^T. Throws RangeError unless 1 <= r <= m.
Matrix spectral_reconstruct(const EigenDecomposition& eig, std::size_t r);

}  // namespace pcakit
