#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pcakit/matrix.hpp"

namespace pcakit {

// Fitted principal-component basis. `components` is m x m with orthonormal
// columns v_1..v_m matching the descending `eigenvalues`; `mean` is the
// per-variable mean of the training data. Immutable after construction.
struct PcaModel {
    std::vector<double> mean;
    Matrix components;
    std::vector<double> eigenvalues;
    std::size_t sample_count;
    std::size_t variable_count;
};

// Coordinates of samples in the component basis: coords is r x n, row k the
// scores along component k.
struct Scores {
    Matrix coords;
    std::size_t component_count;
};

// Per-variable (row) means.
std::vector<double> mean_vector(const Matrix& x);

// x with mu subtracted from each row. Throws ShapeError on length mismatch.
Matrix center(const Matrix& x, std::span<const double> mu);

// (1/(n-1)) * b * b^T for pre-centered b. Throws InsufficientSamplesError
// when b has fewer than 2 columns. Exactly symmetric by construction.
Matrix covariance(const Matrix& b);

// mean_vector -> center -> covariance -> symmetric_eigen, with eigenvalues
// within rounding of zero clamped to zero.
PcaModel fit(const Matrix& x);

// Scores of x on the first r components: coords = P_r^T (x - mu 1^T).
Scores project(const PcaModel& model, const Matrix& x, std::size_t r);

// P_r * coords + mu 1^T; exact inverse of project at r = m.
Matrix reconstruct(const PcaModel& model, const Scores& scores);

// Fraction of total eigenvalue mass captured by the first r components.
// Throws RangeError for r outside [1, m] and NumericError when every
// eigenvalue is zero (constant data).
double spectral_ratio(const PcaModel& model, std::size_t r);

}  // namespace pcakit
