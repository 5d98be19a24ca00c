// AVX2/FMA variants of the elementwise kernels. Compiled with -mavx2 -mfma;
// dispatched at runtime from kernels.cpp only when the CPU reports support.
#if defined(__x86_64__)

#include "rkdv/kernels.hpp"

#include <immintrin.h>

#include <cmath>
#include <cstring>

namespace rkdv::kernels {

namespace {

void axpby_avx2(double a, const double* x, double b, const double* y,
                double* z, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(z + i, _mm256_fmadd_pd(va, vx, _mm256_mul_pd(vb, vy)));
    }
    for (; i < n; ++i) z[i] = a * x[i] + b * y[i];
}

void mul_avx2(const double* x, const double* y, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(z + i, _mm256_mul_pd(vx, vy));
    }
    for (; i < n; ++i) z[i] = x[i] * y[i];
}

void pow_int_avx2(const double* x, int p, double* z, std::size_t n) {
    if (z != x) std::memcpy(z, x, n * sizeof(double));
    for (int k = 1; k < p; ++k) mul_avx2(z, x, z, n);
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        acc = _mm256_fmadd_pd(vx, vy, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double max_abs_avx2(const double* x, std::size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(x + i)));
    double m = hmax(acc);
    for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

double max_abs_diff_avx2(const double* x, const double* y, std::size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_max_pd(acc, _mm256_and_pd(mask, d));
    }
    double m = hmax(acc);
    for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

// Two complex numbers per 256-bit lane: (re0, im0, re1, im1).
void cmul_avx2(const double* a, const double* b, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(a + 2 * i);
        __m256d vb = _mm256_loadu_pd(b + 2 * i);
        __m256d ar = _mm256_movedup_pd(va);               // (re, re)
        __m256d ai = _mm256_permute_pd(va, 0b1111);       // (im, im)
        __m256d bs = _mm256_permute_pd(vb, 0b0101);       // (bi, br)
        _mm256_storeu_pd(z + 2 * i,
                         _mm256_fmaddsub_pd(ar, vb, _mm256_mul_pd(ai, bs)));
    }
    for (; i < n; ++i) {
        const double ar = a[2 * i], ai = a[2 * i + 1];
        const double br = b[2 * i], bi = b[2 * i + 1];
        z[2 * i] = ar * br - ai * bi;
        z[2 * i + 1] = ar * bi + ai * br;
    }
}

constexpr Ops avx2_ops = {
    "avx2",      axpby_avx2,   mul_avx2,          pow_int_avx2,
    dot_avx2,    max_abs_avx2, max_abs_diff_avx2, cmul_avx2,
};

}  // namespace

const Ops& detail_avx2_ops() { return avx2_ops; }

}  // namespace rkdv::kernels

#endif  // __x86_64__
