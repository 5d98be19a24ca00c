#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "rkdv/grid.hpp"

namespace rkdv {

/// Per-axis eigenvalues of the spectral and finite-difference differentiation
/// matrices under the discrete Fourier transform. First-derivative eigenvalues
/// are purely imaginary; only the imaginary part is stored.
struct SpectralTable {
    Grid grid;
    std::vector<double> d1x_imag;  // i*k*mu1, Nyquist zeroed
    std::vector<double> d2x;       // -(k*mu1)^2, Nyquist kept
    std::vector<double> d1y_imag;
    std::vector<double> d2y;
    std::vector<double> b1;        // -(4/h1^2) sin^2(j*pi/N1)
    std::vector<double> b2;
};

SpectralTable build_tables(const Grid& grid);

/// Diagonal representation of a (real) grid operator in 2D frequency space,
/// indexed (j, k) with j varying fastest, matching the mesh layout.
struct OperatorSymbol {
    Grid grid;
    std::string tag;
    std::vector<std::complex<double>> values;

    std::complex<double>& at(int j, int k) { return values[std::size_t(k) * grid.n1 + j]; }
    std::complex<double> at(int j, int k) const { return values[std::size_t(k) * grid.n1 + j]; }
};

OperatorSymbol symbol_A(const SpectralTable& t);   // Laplacian
OperatorSymbol symbol_A2(const SpectralTable& t);  // biharmonic
OperatorSymbol symbol_B(const SpectralTable& t);   // Laplacian * d/dx
OperatorSymbol symbol_Lh(const SpectralTable& t);  // d/dx + d/dy

/// Fourier-diagonal operator application and spectral semi-norms for one grid.
/// Owns cached FFT plans and scratch buffers; not shareable across threads,
/// clone one per worker instead.
class SpectralOps {
public:
    explicit SpectralOps(const Grid& grid);
    ~SpectralOps();
    SpectralOps(const SpectralOps&) = delete;
    SpectralOps& operator=(const SpectralOps&) = delete;

    const Grid& grid() const { return grid_; }
    const SpectralTable& table() const { return table_; }

    /// real(IDFT(sym . DFT(u))). Aborts if the imaginary residue exceeds
    /// round-off scale, which signals a non-conjugate-symmetric symbol.
    MeshFunction apply_symbol(const OperatorSymbol& sym, const MeshFunction& u);

    const OperatorSymbol& sym_A() const { return sym_A_; }
    const OperatorSymbol& sym_A2() const { return sym_A2_; }
    const OperatorSymbol& sym_B() const { return sym_B_; }
    const OperatorSymbol& sym_Lh() const { return sym_Lh_; }

    MeshFunction apply_A(const MeshFunction& u) { return apply_symbol(sym_A_, u); }
    MeshFunction apply_A2(const MeshFunction& u) { return apply_symbol(sym_A2_, u); }
    MeshFunction apply_B(const MeshFunction& u) { return apply_symbol(sym_B_, u); }
    MeshFunction apply_Lh(const MeshFunction& u) { return apply_symbol(sym_Lh_, u); }

    /// Skew-symmetric operator of the semi-discrete system:
    /// D(uhat) v = B v + Lh v + (1/(p+2)) (uhat^p . Lh v + Lh (uhat^p . v)).
    MeshFunction apply_D(const MeshFunction& uhat, const MeshFunction& v, int p);

    double seminorm_1h(const MeshFunction& u);
    double seminorm_2h(const MeshFunction& u);
    double norm_Lh(const MeshFunction& u);

    // Unnormalized forward 2D DFT; out has grid.size() complex entries.
    void forward(const MeshFunction& u, std::complex<double>* out);
    // Inverse with 1/(N1*N2) normalization; enforces the imaginary-residue
    // guard scaled by `scale` (an infinity-norm estimate of the data).
    void inverse_real(const std::complex<double>* in, MeshFunction& out, double scale);

private:
    Grid grid_;
    SpectralTable table_;
    OperatorSymbol sym_A_, sym_A2_, sym_B_, sym_Lh_;
    struct Plans;
    std::unique_ptr<Plans> plans_;
};

}  // namespace rkdv
