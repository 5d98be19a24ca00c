// NEON variants of the elementwise kernels (aarch64 only).
#if defined(__aarch64__)

#include "rkdv/kernels.hpp"

#include <arm_neon.h>

#include <cmath>
#include <cstring>

namespace rkdv::kernels {

namespace {

void axpby_neon(double a, const double* x, double b, const double* y,
                double* z, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t vx = vld1q_f64(x + i);
        float64x2_t vy = vld1q_f64(y + i);
        vst1q_f64(z + i, vfmaq_f64(vmulq_f64(vb, vy), va, vx));
    }
    for (; i < n; ++i) z[i] = a * x[i] + b * y[i];
}

void mul_neon(const double* x, const double* y, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(z + i, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) z[i] = x[i] * y[i];
}

void pow_int_neon(const double* x, int p, double* z, std::size_t n) {
    if (z != x) std::memcpy(z, x, n * sizeof(double));
    for (int k = 1; k < p; ++k) mul_neon(z, x, z, n);
}

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double max_abs_neon(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
    double m = vmaxvq_f64(acc);
    for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

double max_abs_diff_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vmaxq_f64(acc, vabdq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    double m = vmaxvq_f64(acc);
    for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

// One complex number per 128-bit vector: (re, im).
void cmul_neon(const double* a, const double* b, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t va = vld1q_f64(a + 2 * i);
        float64x2_t vb = vld1q_f64(b + 2 * i);
        float64x2_t r = vmulq_laneq_f64(vb, va, 0);          // (ar*br, ar*bi)
        float64x2_t bs = vextq_f64(vb, vb, 1);               // (bi, br)
        float64x2_t s = vmulq_laneq_f64(bs, va, 1);          // (ai*bi, ai*br)
        const float64x2_t sign = {-1.0, 1.0};
        vst1q_f64(z + 2 * i, vfmaq_f64(r, s, sign));
    }
}

constexpr Ops neon_ops = {
    "neon",      axpby_neon,   mul_neon,          pow_int_neon,
    dot_neon,    max_abs_neon, max_abs_diff_neon, cmul_neon,
};

}  // namespace

const Ops& detail_neon_ops() { return neon_ops; }

}  // namespace rkdv::kernels

#endif  // __aarch64__
