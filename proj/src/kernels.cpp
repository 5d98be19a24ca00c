#include "rkdv/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace rkdv::kernels {

#if defined(__x86_64__)
const Ops& detail_avx2_ops();
#elif defined(__aarch64__)
const Ops& detail_neon_ops();
#endif

namespace {

void axpby_scalar(double a, const double* x, double b, const double* y,
                  double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] = a * x[i] + b * y[i];
}

void mul_scalar(const double* x, const double* y, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] * y[i];
}

void pow_int_scalar(const double* x, int p, double* z, std::size_t n) {
    if (z != x) std::memcpy(z, x, n * sizeof(double));
    for (int k = 1; k < p; ++k)
        for (std::size_t i = 0; i < n; ++i) z[i] *= x[i];
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double max_abs_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
    return m;
}

double max_abs_diff_scalar(const double* x, const double* y, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

void cmul_scalar(const double* a, const double* b, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[2 * i], ai = a[2 * i + 1];
        const double br = b[2 * i], bi = b[2 * i + 1];
        z[2 * i] = ar * br - ai * bi;
        z[2 * i + 1] = ar * bi + ai * br;
    }
}

constexpr Ops scalar_ops = {
    "scalar",        axpby_scalar,   mul_scalar,  pow_int_scalar,
    dot_scalar,      max_abs_scalar, max_abs_diff_scalar, cmul_scalar,
};

const Ops* select() {
    if (const char* env = std::getenv("RKDV_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops;
    }
#if defined(__x86_64__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &detail_avx2_ops();
#elif defined(__aarch64__)
    return &detail_neon_ops();
#endif
    return &scalar_ops;
}

}  // namespace

const Ops& scalar() { return scalar_ops; }

const Ops& active() {
    static const Ops* ops = select();
    return *ops;
}

}  // namespace rkdv::kernels
