#include "pcakit/kernels.hpp"

// Reference kernels. The reduction bodies spell out the sixteen partial sums
// from the contract in kernels.hpp; the SIMD variants reproduce them lane for
// lane.

namespace pcakit::kern {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s[16] = {};
    const std::size_t body = n & ~static_cast<std::size_t>(15);
    for (std::size_t i = 0; i < body; i += 16) {
        for (std::size_t l = 0; l < 16; ++l) s[l] += x[i + l] * y[i + l];
    }
    double t0 = (s[0] + s[1]) + (s[2] + s[3]);
    double t1 = (s[4] + s[5]) + (s[6] + s[7]);
    double t2 = (s[8] + s[9]) + (s[10] + s[11]);
    double t3 = (s[12] + s[13]) + (s[14] + s[15]);
    double acc = (t0 + t1) + (t2 + t3);
    for (std::size_t i = body; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double sum_scalar(const double* x, std::size_t n) {
    double s[16] = {};
    const std::size_t body = n & ~static_cast<std::size_t>(15);
    for (std::size_t i = 0; i < body; i += 16) {
        for (std::size_t l = 0; l < 16; ++l) s[l] += x[i + l];
    }
    double t0 = (s[0] + s[1]) + (s[2] + s[3]);
    double t1 = (s[4] + s[5]) + (s[6] + s[7]);
    double t2 = (s[8] + s[9]) + (s[10] + s[11]);
    double t3 = (s[12] + s[13]) + (s[14] + s[15]);
    double acc = (t0 + t1) + (t2 + t3);
    for (std::size_t i = body; i < n; ++i) acc += x[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void sub_scalar_scalar(const double* x, double m, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - m;
}

void add_scalar_scalar(double* x, double m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] += m;
}

void rotate_pair_scalar(double* x, double* y, double c, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace

const Table& scalar_table() {
    static const Table table = {
        "scalar",         dot_scalar,        sum_scalar,
        axpy_scalar,      sub_scalar_scalar, add_scalar_scalar,
        rotate_pair_scalar,
    };
    return table;
}

}  // namespace pcakit::kern
