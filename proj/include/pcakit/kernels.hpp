#pragma once

#include <cstddef>

namespace pcakit::kern {

// Inner-loop kernels behind every matrix/PCA operation. Each kernel has a
// scalar reference implementation plus SIMD variants selected at runtime;
// all variants of a kernel must produce bit-identical results on identical
// input bytes.
//
// To make that hold for the reductions (dot, sum), the accumulation order is
// part of the contract, not an implementation detail:
//
//   * sixteen partial sums s_0..s_15, s_l accumulating elements with
//     index == l (mod 16), over the largest prefix of length 16*floor(n/16)
//   * t_j = (s_{4j} + s_{4j+1}) + (s_{4j+2} + s_{4j+3}) for j = 0..3
//   * acc = (t_0 + t_1) + (t_2 + t_3)
//   * remaining elements are folded into acc sequentially
//
// Products are never fused into the adds (no FMA, -ffp-contract=off), so the
// elementwise kernels round exactly like the scalar reference as well.
struct Table {
    const char* name;

    // sum_i x[i] * y[i]; x and y may alias.
    double (*dot)(const double* x, const double* y, std::size_t n);

    // sum_i x[i]
    double (*sum)(const double* x, std::size_t n);

    // y[i] += a * x[i]; x and y must not overlap.
    void (*axpy)(double a, const double* x, double* y, std::size_t n);

    // out[i] = x[i] - m; out may alias x.
    void (*sub_scalar)(const double* x, double m, double* out, std::size_t n);

    // x[i] += m
    void (*add_scalar)(double* x, double m, std::size_t n);

    // (x, y) <- (c*x - s*y, s*x + c*y) elementwise; x and y must not overlap.
    void (*rotate_pair)(double* x, double* y, double c, double s, std::size_t n);
};

// Always-available reference kernels.
const Table& scalar_table();

// SIMD variants; null when the build or the running CPU lacks the extension.
const Table* avx2_table();
const Table* neon_table();

// Table used by the library, chosen once at first use: AVX2, then NEON, then
// scalar. The environment variable PCAKIT_KERNELS=scalar|avx2|neon forces a
// choice (falling back to scalar when the forced table is unavailable).
const Table& active();

inline double dot(const double* x, const double* y, std::size_t n) {
    return active().dot(x, y, n);
}
inline double sum(const double* x, std::size_t n) { return active().sum(x, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) {
    active().axpy(a, x, y, n);
}
inline void sub_scalar(const double* x, double m, double* out, std::size_t n) {
    active().sub_scalar(x, m, out, n);
}
inline void add_scalar(double* x, double m, std::size_t n) {
    active().add_scalar(x, m, n);
}
inline void rotate_pair(double* x, double* y, double c, double s, std::size_t n) {
    active().rotate_pair(x, y, c, s, n);
}

}  // namespace pcakit::kern
