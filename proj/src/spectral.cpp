#include "rkdv/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

#include "rkdv/kernels.hpp"

namespace rkdv {

namespace {

// First-derivative eigenvalues (imaginary parts): i*k*mu with the Nyquist
// mode zeroed, keeping odd-derivative outputs real.
std::vector<double> d1_eigs(int n, double mu) {
    std::vector<double> lam(n, 0.0);
    for (int j = 0; j < n; ++j) {
        if (j < n / 2)
            lam[j] = j * mu;
        else if (j > n / 2)
            lam[j] = (j - n) * mu;
    }
    return lam;
}

// Second-derivative eigenvalues: -(k*mu)^2, Nyquist kept.
std::vector<double> d2_eigs(int n, double mu) {
    std::vector<double> lam(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const double k = (j <= n / 2) ? j * mu : (j - n) * mu;
        lam[j] = -k * k;
    }
    return lam;
}

std::vector<double> b_eigs(int n, double h) {
    std::vector<double> lam(n, 0.0);
    const double pi = 3.14159265358979323846;
    for (int j = 0; j < n; ++j) {
        const double s = std::sin(j * pi / n);
        lam[j] = -4.0 / (h * h) * s * s;
    }
    return lam;
}

OperatorSymbol make_symbol(const Grid& g, std::string tag) {
    OperatorSymbol s;
    s.grid = g;
    s.tag = std::move(tag);
    s.values.assign(g.size(), {0.0, 0.0});
    return s;
}

}  // namespace

SpectralTable build_tables(const Grid& grid) {
    SpectralTable t;
    t.grid = grid;
    t.d1x_imag = d1_eigs(grid.n1, grid.mu1);
    t.d2x = d2_eigs(grid.n1, grid.mu1);
    t.b1 = b_eigs(grid.n1, grid.h1);
    if (grid.dim == 2) {
        t.d1y_imag = d1_eigs(grid.n2, grid.mu2);
        t.d2y = d2_eigs(grid.n2, grid.mu2);
        t.b2 = b_eigs(grid.n2, grid.h2);
    } else {
        t.d1y_imag.assign(1, 0.0);
        t.d2y.assign(1, 0.0);
        t.b2.assign(1, 0.0);
    }
    return t;
}

OperatorSymbol symbol_A(const SpectralTable& t) {
    OperatorSymbol s = make_symbol(t.grid, "A");
    for (int k = 0; k < t.grid.n2; ++k)
        for (int j = 0; j < t.grid.n1; ++j)
            s.at(j, k) = t.d2x[j] + t.d2y[k];
    return s;
}

OperatorSymbol symbol_A2(const SpectralTable& t) {
    OperatorSymbol s = make_symbol(t.grid, "A2");
    for (int k = 0; k < t.grid.n2; ++k)
        for (int j = 0; j < t.grid.n1; ++j) {
            const double a = t.d2x[j] + t.d2y[k];
            s.at(j, k) = a * a;
        }
    return s;
}

OperatorSymbol symbol_B(const SpectralTable& t) {
    // B = I (x) D3x + D2y (x) D1x with D3x = D1x * D2x, so the symbol is
    // lam1x * (lam2x + lam2y), purely imaginary.
    OperatorSymbol s = make_symbol(t.grid, "B");
    for (int k = 0; k < t.grid.n2; ++k)
        for (int j = 0; j < t.grid.n1; ++j)
            s.at(j, k) = {0.0, t.d1x_imag[j] * (t.d2x[j] + t.d2y[k])};
    return s;
}

OperatorSymbol symbol_Lh(const SpectralTable& t) {
    OperatorSymbol s = make_symbol(t.grid, "Lh");
    for (int k = 0; k < t.grid.n2; ++k)
        for (int j = 0; j < t.grid.n1; ++j)
            s.at(j, k) = {0.0, t.d1x_imag[j] + t.d1y_imag[k]};
    return s;
}

struct SpectralOps::Plans {
    fftw_complex* in;
    fftw_complex* out;
    fftw_plan fwd;
    fftw_plan bwd;

    explicit Plans(const Grid& g) {
        const std::size_t n = g.size();
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        // Row-major dims (n2, n1): j1 is the contiguous index, matching the
        // columnwise mesh layout.
        fwd = fftw_plan_dft_2d(g.n2, g.n1, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_2d(g.n2, g.n1, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Plans() {
        fftw_destroy_plan(bwd);
        fftw_destroy_plan(fwd);
        fftw_free(out);
        fftw_free(in);
    }
};

SpectralOps::SpectralOps(const Grid& grid)
    : grid_(grid),
      table_(build_tables(grid)),
      sym_A_(symbol_A(table_)),
      sym_A2_(symbol_A2(table_)),
      sym_B_(symbol_B(table_)),
      sym_Lh_(symbol_Lh(table_)),
      plans_(std::make_unique<Plans>(grid)) {}

SpectralOps::~SpectralOps() = default;

void SpectralOps::forward(const MeshFunction& u, std::complex<double>* out) {
    if (!(u.grid == grid_)) throw std::invalid_argument("grid mismatch");
    const std::size_t n = grid_.size();
    for (std::size_t i = 0; i < n; ++i) {
        plans_->in[i][0] = u.values[i];
        plans_->in[i][1] = 0.0;
    }
    fftw_execute(plans_->fwd);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = {plans_->out[i][0], plans_->out[i][1]};
}

void SpectralOps::inverse_real(const std::complex<double>* in, MeshFunction& out,
                               double scale) {
    const std::size_t n = grid_.size();
    for (std::size_t i = 0; i < n; ++i) {
        plans_->in[i][0] = in[i].real();
        plans_->in[i][1] = in[i].imag();
    }
    fftw_execute(plans_->bwd);
    const double invn = 1.0 / double(n);
    out.grid = grid_;
    out.values.resize(n);
    double max_im = 0.0, max_re = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = plans_->out[i][0] * invn;
        const double im = plans_->out[i][1] * invn;
        out.values[i] = re;
        max_im = std::max(max_im, std::abs(im));
        max_re = std::max(max_re, std::abs(re));
    }
    const double ref = std::max({max_re, scale, 1e-300});
    if (max_im > 1e-10 * ref)
        throw std::runtime_error("spectral operator produced a non-real result "
                                 "(conjugate symmetry violated)");
}

MeshFunction SpectralOps::apply_symbol(const OperatorSymbol& sym,
                                       const MeshFunction& u) {
    if (!(sym.grid == grid_)) throw std::invalid_argument("symbol built for another grid");
    const std::size_t n = grid_.size();
    std::vector<std::complex<double>> hat(n);
    forward(u, hat.data());
    kernels::active().cmul(reinterpret_cast<const double*>(sym.values.data()),
                           reinterpret_cast<const double*>(hat.data()),
                           reinterpret_cast<double*>(hat.data()), n);
    const double sym_mag = kernels::active().max_abs(
        reinterpret_cast<const double*>(sym.values.data()), 2 * n);
    MeshFunction w;
    inverse_real(hat.data(), w, 2.0 * sym_mag * norm_inf(u));
    return w;
}

MeshFunction SpectralOps::apply_D(const MeshFunction& uhat, const MeshFunction& v,
                                  int p) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    const std::size_t n = grid_.size();
    const auto& k = kernels::active();

    MeshFunction upow(grid_);
    k.pow_int(uhat.data(), p, upow.data(), n);

    MeshFunction lhv = apply_Lh(v);
    MeshFunction bv = apply_B(v);

    MeshFunction t1(grid_);
    k.mul(upow.data(), lhv.data(), t1.data(), n);  // uhat^p . Lh v

    MeshFunction w(grid_);
    k.mul(upow.data(), v.data(), w.data(), n);
    MeshFunction t2 = apply_Lh(w);                 // Lh (uhat^p . v)

    const double c = 1.0 / (p + 2);
    MeshFunction r(grid_);
    k.axpby(1.0, bv.data(), 1.0, lhv.data(), r.data(), n);
    k.axpby(c, t1.data(), 1.0, r.data(), r.data(), n);
    k.axpby(c, t2.data(), 1.0, r.data(), r.data(), n);
    return r;
}

double SpectralOps::seminorm_1h(const MeshFunction& u) {
    const std::size_t n = grid_.size();
    std::vector<std::complex<double>> hat(n);
    forward(u, hat.data());
    double s = 0.0;
    for (int k = 0; k < grid_.n2; ++k)
        for (int j = 0; j < grid_.n1; ++j) {
            const double w = table_.d1x_imag[j] * table_.d1x_imag[j] +
                             table_.d1y_imag[k] * table_.d1y_imag[k];
            s += w * std::norm(hat[std::size_t(k) * grid_.n1 + j]);
        }
    // Parseval factor for the unnormalized forward transform.
    return std::sqrt(grid_.h1 * grid_.h2 * s / double(n));
}

double SpectralOps::seminorm_2h(const MeshFunction& u) {
    return norm_h(apply_A(u));
}

double SpectralOps::norm_Lh(const MeshFunction& u) {
    return norm_h(apply_Lh(u));
}

}  // namespace rkdv
