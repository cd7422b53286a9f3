#include "pcakit/kernels.hpp"

// NEON kernel variants for aarch64. float64x2_t is two lanes wide, so each of
// the contract's sixteen partial sums lives in half a register pair; vaddvq
// adds the two lanes of one register, which is exactly the (s_a + s_b) inner
// pairing of the contract. No vfma: multiply and add round separately, like
// the scalar reference.

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

namespace pcakit::kern {
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t a[8];
    for (auto& v : a) v = vdupq_n_f64(0.0);
    const std::size_t body = n & ~static_cast<std::size_t>(15);
    for (std::size_t i = 0; i < body; i += 16) {
        for (std::size_t j = 0; j < 8; ++j) {
            a[j] = vaddq_f64(a[j], vmulq_f64(vld1q_f64(x + i + 2 * j), vld1q_f64(y + i + 2 * j)));
        }
    }
    // a[2j] holds (s_{4j}, s_{4j+1}), a[2j+1] holds (s_{4j+2}, s_{4j+3})
    const double t0 = vaddvq_f64(a[0]) + vaddvq_f64(a[1]);
    const double t1 = vaddvq_f64(a[2]) + vaddvq_f64(a[3]);
    const double t2 = vaddvq_f64(a[4]) + vaddvq_f64(a[5]);
    const double t3 = vaddvq_f64(a[6]) + vaddvq_f64(a[7]);
    double acc = (t0 + t1) + (t2 + t3);
    for (std::size_t i = body; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double sum_neon(const double* x, std::size_t n) {
    float64x2_t a[8];
    for (auto& v : a) v = vdupq_n_f64(0.0);
    const std::size_t body = n & ~static_cast<std::size_t>(15);
    for (std::size_t i = 0; i < body; i += 16) {
        for (std::size_t j = 0; j < 8; ++j) {
            a[j] = vaddq_f64(a[j], vld1q_f64(x + i + 2 * j));
        }
    }
    const double t0 = vaddvq_f64(a[0]) + vaddvq_f64(a[1]);
    const double t1 = vaddvq_f64(a[2]) + vaddvq_f64(a[3]);
    const double t2 = vaddvq_f64(a[4]) + vaddvq_f64(a[5]);
    const double t3 = vaddvq_f64(a[6]) + vaddvq_f64(a[7]);
    double acc = (t0 + t1) + (t2 + t3);
    for (std::size_t i = body; i < n; ++i) acc += x[i];
    return acc;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    const std::size_t body = n & ~static_cast<std::size_t>(1);
    for (std::size_t i = 0; i < body; i += 2) {
        vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(av, vld1q_f64(x + i))));
    }
    for (std::size_t i = body; i < n; ++i) y[i] += a * x[i];
}

void sub_scalar_neon(const double* x, double m, double* out, std::size_t n) {
    const float64x2_t mv = vdupq_n_f64(m);
    const std::size_t body = n & ~static_cast<std::size_t>(1);
    for (std::size_t i = 0; i < body; i += 2) {
        vst1q_f64(out + i, vsubq_f64(vld1q_f64(x + i), mv));
    }
    for (std::size_t i = body; i < n; ++i) out[i] = x[i] - m;
}

void add_scalar_neon(double* x, double m, std::size_t n) {
    const float64x2_t mv = vdupq_n_f64(m);
    const std::size_t body = n & ~static_cast<std::size_t>(1);
    for (std::size_t i = 0; i < body; i += 2) {
        vst1q_f64(x + i, vaddq_f64(vld1q_f64(x + i), mv));
    }
    for (std::size_t i = body; i < n; ++i) x[i] += m;
}

void rotate_pair_neon(double* x, double* y, double c, double s, std::size_t n) {
    const float64x2_t cv = vdupq_n_f64(c);
    const float64x2_t sv = vdupq_n_f64(s);
    const std::size_t body = n & ~static_cast<std::size_t>(1);
    for (std::size_t i = 0; i < body; i += 2) {
        const float64x2_t xv = vld1q_f64(x + i);
        const float64x2_t yv = vld1q_f64(y + i);
        vst1q_f64(x + i, vsubq_f64(vmulq_f64(cv, xv), vmulq_f64(sv, yv)));
        vst1q_f64(y + i, vaddq_f64(vmulq_f64(sv, xv), vmulq_f64(cv, yv)));
    }
    for (std::size_t i = body; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace

const Table* neon_table() {
    static const Table table = {
        "neon",         dot_neon,        sum_neon,
        axpy_neon,      sub_scalar_neon, add_scalar_neon,
        rotate_pair_neon,
    };
    return &table;
}

}  // namespace pcakit::kern

#else  // not aarch64 NEON

namespace pcakit::kern {
const Table* neon_table() { return nullptr; }
}  // namespace pcakit::kern

#endif
