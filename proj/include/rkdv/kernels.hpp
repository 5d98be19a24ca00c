#pragma once

#include <cstddef>

namespace rkdv::kernels {

// Elementwise double-precision kernels used by the hot loops of the solver.
// A scalar reference implementation always exists; wider variants (AVX2 on
// x86-64, NEON on aarch64) are selected at runtime and must agree with the
// reference up to reassociation of reductions.
struct Ops {
    const char* name;

    // z[i] = a*x[i] + b*y[i]
    void (*axpby)(double a, const double* x, double b, const double* y,
                  double* z, std::size_t n);

    // z[i] = x[i]*y[i]
    void (*mul)(const double* x, const double* y, double* z, std::size_t n);

    // z[i] = x[i]^p by repeated multiplication, p >= 1
    void (*pow_int)(const double* x, int p, double* z, std::size_t n);

    // sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);

    // max_i |x[i]|
    double (*max_abs)(const double* x, std::size_t n);

    // max_i |x[i] - y[i]|
    double (*max_abs_diff)(const double* x, const double* y, std::size_t n);

    // z[i] = a[i]*b[i] for interleaved complex arrays (re,im pairs);
    // n counts complex elements. z may alias a or b.
    void (*cmul)(const double* a, const double* b, double* z, std::size_t n);
};

const Ops& scalar();

// Runtime-selected variant. Set RKDV_KERNELS=scalar to force the reference
// path (used by the equivalence tests).
const Ops& active();

}  // namespace rkdv::kernels
