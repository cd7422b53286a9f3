#include "pcakit/pca.hpp"

#include <cmath>
#include <string>

#include "pcakit/eigen.hpp"
#include "pcakit/errors.hpp"
#include "pcakit/kernels.hpp"

namespace pcakit {

std::vector<double> mean_vector(const Matrix& x) {
    const double n = static_cast<double>(x.cols());
    std::vector<double> mu(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        mu[i] = kern::sum(x.row_ptr(i), x.cols()) / n;
    }
    return mu;
}

Matrix center(const Matrix& x, std::span<const double> mu) {
    if (mu.size() != x.rows()) {
        throw ShapeError("center: mean has length " + std::to_string(mu.size()) +
                         ", matrix has " + std::to_string(x.rows()) + " rows");
    }
    Matrix b(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        kern::sub_scalar(x.row_ptr(i), mu[i], b.row_ptr(i), x.cols());
    }
    return b;
}

Matrix covariance(const Matrix& b) {
    if (b.cols() < 2) {
        throw InsufficientSamplesError("covariance: needs at least 2 samples, got " +
                                       std::to_string(b.cols()));
    }
    const double divisor = static_cast<double>(b.cols() - 1);
    const std::size_t m = b.rows();
    Matrix s(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = i; k < m; ++k) {
            const double v = kern::dot(b.row_ptr(i), b.row_ptr(k), b.cols()) / divisor;
            s(i, k) = v;
            s(k, i) = v;
        }
    }
    return s;
}

PcaModel fit(const Matrix& x) {
    std::vector<double> mu = mean_vector(x);
    const Matrix b = center(x, mu);
    const Matrix s = covariance(b);
    EigenDecomposition eig = symmetric_eigen(s);

    // A covariance matrix is positive semidefinite; eigenvalues within
    // rounding of zero are clamped, anything clearly below zero means the
    // solver went wrong. The floor scales with the spectrum because the
    // eigensolver resolves zero modes only down to its off-diagonal
    // threshold of 1e-12 * ||S||_F; 1e-10 * max|lambda| keeps two orders of
    // margin over that while still flagging order-of-scale negatives.
    double max_mag = 0.0;
    for (double v : eig.values) max_mag = std::max(max_mag, std::fabs(v));
    const double floor = std::max(1e-10, 1e-10 * max_mag);
    for (double& v : eig.values) {
        if (v < 0.0) {
            if (v < -floor) {
                throw NumericError("fit: eigenvalue " + std::to_string(v) +
                                   " below the rounding floor -" + std::to_string(floor));
            }
            v = 0.0;
        }
    }

    return PcaModel{std::move(mu), std::move(eig.vectors), std::move(eig.values),
                    x.cols(), x.rows()};
}

Scores project(const PcaModel& model, const Matrix& x, std::size_t r) {
    const std::size_t m = model.variable_count;
    if (x.rows() != m) {
        throw ShapeError("project: data has " + std::to_string(x.rows()) +
                         " rows, model expects " + std::to_string(m));
    }
    if (r < 1 || r > m) {
        throw RangeError("project: r = " + std::to_string(r) + " outside [1, " +
                         std::to_string(m) + "]");
    }
    const Matrix b = center(x, model.mean);
    Matrix coords(r, b.cols());
    for (std::size_t k = 0; k < r; ++k) {
        double* out = coords.row_ptr(k);
        for (std::size_t i = 0; i < m; ++i) {
            kern::axpy(model.components(i, k), b.row_ptr(i), out, b.cols());
        }
    }
    return Scores{std::move(coords), r};
}

Matrix reconstruct(const PcaModel& model, const Scores& scores) {
    const std::size_t m = model.variable_count;
    const std::size_t r = scores.coords.rows();
    if (r > m) {
        throw ShapeError("reconstruct: scores carry " + std::to_string(r) +
                         " components, model has " + std::to_string(m));
    }
    const std::size_t n = scores.coords.cols();
    Matrix x(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        double* out = x.row_ptr(i);
        for (std::size_t k = 0; k < r; ++k) {
            kern::axpy(model.components(i, k), scores.coords.row_ptr(k), out, n);
        }
        kern::add_scalar(out, model.mean[i], n);
    }
    return x;
}

double spectral_ratio(const PcaModel& model, std::size_t r) {
    const std::size_t m = model.variable_count;
    if (r < 1 || r > m) {
        throw RangeError("spectral_ratio: r = " + std::to_string(r) + " outside [1, " +
                         std::to_string(m) + "]");
    }
    double partial = 0.0;
    for (std::size_t k = 0; k < r; ++k) partial += model.eigenvalues[k];
    double total = partial;
    for (std::size_t k = r; k < m; ++k) total += model.eigenvalues[k];
    if (total == 0.0) {
        throw NumericError("spectral_ratio: all eigenvalues are zero (constant data)");
    }
    return partial / total;
}

}  // namespace pcakit
