#include "pcakit/kernels.hpp"

// AVX2 kernel variants. This translation unit is compiled with -mavx2 on
// x86-64; avx2_table() still gates on a runtime CPUID check before handing
// the table out. Products and sums stay separate instructions (no FMA) so
// every lane rounds exactly like the scalar reference.

#if defined(__AVX2__)

#include <immintrin.h>

namespace pcakit::kern {
namespace {

// (lane0 + lane1) + (lane2 + lane3)
inline double hsum_pairwise(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const double l0 = _mm_cvtsd_f64(lo);
    const double l1 = _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
    const double l2 = _mm_cvtsd_f64(hi);
    const double l3 = _mm_cvtsd_f64(_mm_unpackhi_pd(hi, hi));
    return (l0 + l1) + (l2 + l3);
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    __m256d a2 = _mm256_setzero_pd();
    __m256d a3 = _mm256_setzero_pd();
    const std::size_t body = n & ~static_cast<std::size_t>(15);
    for (std::size_t i = 0; i < body; i += 16) {
        a0 = _mm256_add_pd(a0, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
        a1 = _mm256_add_pd(a1, _mm256_mul_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
        a2 = _mm256_add_pd(a2, _mm256_mul_pd(_mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(y + i + 8)));
        a3 = _mm256_add_pd(a3, _mm256_mul_pd(_mm256_loadu_pd(x + i + 12), _mm256_loadu_pd(y + i + 12)));
    }
    const double t0 = hsum_pairwise(a0);
    const double t1 = hsum_pairwise(a1);
    const double t2 = hsum_pairwise(a2);
    const double t3 = hsum_pairwise(a3);
    double acc = (t0 + t1) + (t2 + t3);
    for (std::size_t i = body; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    __m256d a2 = _mm256_setzero_pd();
    __m256d a3 = _mm256_setzero_pd();
    const std::size_t body = n & ~static_cast<std::size_t>(15);
    for (std::size_t i = 0; i < body; i += 16) {
        a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
        a1 = _mm256_add_pd(a1, _mm256_loadu_pd(x + i + 4));
        a2 = _mm256_add_pd(a2, _mm256_loadu_pd(x + i + 8));
        a3 = _mm256_add_pd(a3, _mm256_loadu_pd(x + i + 12));
    }
    const double t0 = hsum_pairwise(a0);
    const double t1 = hsum_pairwise(a1);
    const double t2 = hsum_pairwise(a2);
    const double t3 = hsum_pairwise(a3);
    double acc = (t0 + t1) + (t2 + t3);
    for (std::size_t i = body; i < n; ++i) acc += x[i];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    const std::size_t body = n & ~static_cast<std::size_t>(3);
    for (std::size_t i = 0; i < body; i += 4) {
        const __m256d yv = _mm256_loadu_pd(y + i);
        const __m256d xv = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(yv, _mm256_mul_pd(av, xv)));
    }
    for (std::size_t i = body; i < n; ++i) y[i] += a * x[i];
}

void sub_scalar_avx2(const double* x, double m, double* out, std::size_t n) {
    const __m256d mv = _mm256_set1_pd(m);
    const std::size_t body = n & ~static_cast<std::size_t>(3);
    for (std::size_t i = 0; i < body; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(x + i), mv));
    }
    for (std::size_t i = body; i < n; ++i) out[i] = x[i] - m;
}

void add_scalar_avx2(double* x, double m, std::size_t n) {
    const __m256d mv = _mm256_set1_pd(m);
    const std::size_t body = n & ~static_cast<std::size_t>(3);
    for (std::size_t i = 0; i < body; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_add_pd(_mm256_loadu_pd(x + i), mv));
    }
    for (std::size_t i = body; i < n; ++i) x[i] += m;
}

void rotate_pair_avx2(double* x, double* y, double c, double s, std::size_t n) {
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = _mm256_set1_pd(s);
    const std::size_t body = n & ~static_cast<std::size_t>(3);
    for (std::size_t i = 0; i < body; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        const __m256d yv = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_sub_pd(_mm256_mul_pd(cv, xv), _mm256_mul_pd(sv, yv)));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_mul_pd(sv, xv), _mm256_mul_pd(cv, yv)));
    }
    for (std::size_t i = body; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace

const Table* avx2_table() {
    static const Table table = {
        "avx2",         dot_avx2,        sum_avx2,
        axpy_avx2,      sub_scalar_avx2, add_scalar_avx2,
        rotate_pair_avx2,
    };
    return __builtin_cpu_supports("avx2") ? &table : nullptr;
}

}  // namespace pcakit::kern

#else  // !__AVX2__

namespace pcakit::kern {
const Table* avx2_table() { return nullptr; }
}  // namespace pcakit::kern

#endif
