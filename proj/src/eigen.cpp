#include "pcakit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pcakit/errors.hpp"
#include "pcakit/kernels.hpp"

namespace pcakit {
namespace {

double offdiag_norm(const Matrix& a) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) total += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(total);
}

// One Jacobi rotation annihilating a(p,q). Rows p and q are rotated with the
// SIMD kernel, the 2x2 pivot block is written in closed form, and columns p
// and q are restored from the rows to keep the matrix exactly symmetric.
void apply_rotation(Matrix& a, Matrix& vt, std::size_t p, std::size_t q) {
    const std::size_t m = a.rows();
    const double apq = a(p, q);
    const double app = a(p, p);
    const double aqq = a(q, q);

    const double theta = (aqq - app) / (2.0 * apq);
    double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    kern::rotate_pair(a.row_ptr(p), a.row_ptr(q), c, s, m);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        if (j == p || j == q) continue;
        a(j, p) = a(p, j);
        a(j, q) = a(q, j);
    }

    kern::rotate_pair(vt.row_ptr(p), vt.row_ptr(q), c, s, m);
}

}  // namespace

EigenDecomposition symmetric_eigen(const Matrix& s, const JacobiOptions& opts) {
    if (s.rows() != s.cols()) {
        throw ShapeError("symmetric_eigen: matrix is " + std::to_string(s.rows()) + "x" +
                         std::to_string(s.cols()) + ", expected square");
    }
    const std::size_t m = s.rows();
    const double norm = frobenius_norm(s);

    double worst_asym = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            worst_asym = std::max(worst_asym, std::fabs(s(i, j) - s(j, i)));
        }
    }
    const double asym_tol = opts.asym_tol_factor * std::max(1.0, norm);
    if (worst_asym > asym_tol) {
        throw SymmetryError("symmetric_eigen: asymmetry " + std::to_string(worst_asym) +
                            " exceeds tolerance " + std::to_string(asym_tol));
    }

    Matrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));
    }
    Matrix vt = Matrix::identity(m);  // rows are the current eigenvector candidates

    const double off_tol = opts.off_tol_factor * norm;
    bool converged = false;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        if (offdiag_norm(a) <= off_tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                if (a(p, q) != 0.0) apply_rotation(a, vt, p, q);
            }
        }
    }
    if (!converged && offdiag_norm(a) > off_tol) {
        throw ConvergenceError("symmetric_eigen: off-diagonal residual " +
                                   std::to_string(offdiag_norm(a)) + " above " +
                                   std::to_string(off_tol) + " after " +
                                   std::to_string(opts.max_sweeps) + " sweeps",
                               offdiag_norm(a));
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return a(l, l) > a(r, r); });

    std::vector<double> values(m);
    Matrix vectors(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t src = order[k];
        values[k] = a(src, src);

        // sign rule: largest-magnitude entry positive, earliest on ties
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double mag = std::fabs(vt(src, i));
            if (mag > best) {
                best = mag;
                arg = i;
            }
        }
        const double sign = vt(src, arg) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < m; ++i) vectors(i, k) = sign * vt(src, i);
    }
    return EigenDecomposition(std::move(values), std::move(vectors));
}

Matrix spectral_reconstruct(const EigenDecomposition& eig, std::size_t r) {
    const std::size_t m = eig.vectors.rows();
    if (r < 1 || r > m) {
        throw RangeError("spectral_reconstruct: r = " + std::to_string(r) +
                         " outside [1, " + std::to_string(m) + "]");
    }
    Matrix a(m, m);
    std::vector<double> v(m);
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < m; ++i) v[i] = eig.vectors(i, k);
        for (std::size_t i = 0; i < m; ++i) {
            kern::axpy(eig.values[k] * v[i], v.data(), a.row_ptr(i), m);
        }
    }
    return a;
}

}  // namespace pcakit
