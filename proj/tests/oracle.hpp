#pragma once

// Dense test oracles: explicit DFT-matrix assembly of every spectral operator
// plus a direct linear solver. Test-only; independent of the FFT-based
// implementation path.

#include <complex>
#include <string>
#include <vector>

#include "rkdv/grid.hpp"

namespace rkdv::oracle {

using cd = std::complex<double>;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<cd> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, cd{}) {}
    cd& operator()(int r, int c) { return a[std::size_t(r) * cols + c]; }
    cd operator()(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

Mat identity(int n);
Mat dft(int n);  // unitary DFT matrix, (1/sqrt(N)) exp(-2*pi*i*j*k/N)
Mat dagger(const Mat& m);
Mat matmul(const Mat& x, const Mat& y);
Mat add(const Mat& x, const Mat& y);
Mat scale(cd s, const Mat& x);
Mat kron(const Mat& x, const Mat& y);
Mat diag(const std::vector<cd>& d);
std::vector<cd> matvec(const Mat& m, const std::vector<cd>& x);

// Per-axis dense operators rebuilt from their eigendecompositions.
Mat dense_d1(int n, double mu);
Mat dense_d2(int n, double mu);
Mat dense_d3(int n, double mu);  // D1 * D2
Mat dense_b_stencil(int n, double h);  // periodic -2/1 circulant, no DFT

/// Dense grid operator for tag in {"D1x","D2x","A","A2","B","Lh"}.
/// Guarded to N1*N2 <= 64.
Mat dense_operator(const Grid& g, const std::string& tag);

/// Dense skew operator D(uhat) = B + Lh + (1/(p+2))(diag(uhat^p) Lh + Lh diag(uhat^p)).
Mat dense_D(const Grid& g, const MeshFunction& uhat, int p);

std::vector<double> apply_real(const Mat& m, const MeshFunction& u);

/// Gaussian elimination with partial pivoting on the real part of m.
std::vector<double> solve_real(const Mat& m, const std::vector<double>& rhs);

}  // namespace rkdv::oracle
