#include "rkdv/stepper.hpp"

#include <cmath>

#include "rkdv/kernels.hpp"

namespace rkdv {

double momentum(SpectralOps& ops, const MeshFunction& u) {
    const double a = norm_h(u);
    const double b = ops.seminorm_2h(u);
    return a * a + b * b;
}

OperatorSymbol timestep_symbol(const SpectralTable& t, double tau) {
    if (tau == 0.0 || !std::isfinite(tau))
        throw std::invalid_argument("tau must be nonzero and finite");
    OperatorSymbol s;
    s.grid = t.grid;
    s.tag = "timestep";
    s.values.assign(t.grid.size(), {0.0, 0.0});
    for (int k = 0; k < t.grid.n2; ++k)
        for (int j = 0; j < t.grid.n1; ++j) {
            const double a = t.d2x[j] + t.d2y[k];
            const double im =
                t.d1x_imag[j] * a + t.d1x_imag[j] + t.d1y_imag[k];
            s.at(j, k) = {1.0 + a * a, 0.5 * tau * im};
        }
    return s;
}

Stepper::Stepper(SpectralOps& ops, SchemeConfig cfg)
    : ops_(ops), cfg_(std::move(cfg)), m_(timestep_symbol(ops.table(), cfg_.tau)) {
    if (cfg_.p < 1) throw std::invalid_argument("p must be >= 1");
    if (!(cfg_.iter_tol > 0.0)) throw std::invalid_argument("iter_tol must be positive");
    if (cfg_.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    const std::size_t n = ops_.grid().size();
    inv_m_.resize(n);
    one_plus_a2_.resize(n);
    const SpectralTable& t = ops_.table();
    for (int k = 0; k < t.grid.n2; ++k)
        for (int j = 0; j < t.grid.n1; ++j) {
            const std::size_t i = std::size_t(k) * t.grid.n1 + j;
            inv_m_[i] = 1.0 / m_.values[i];
            const double a = t.d2x[j] + t.d2y[k];
            one_plus_a2_[i] = 1.0 + a * a;
        }
}

std::pair<MeshFunction, StepDiagnostics> Stepper::solve_halfstep(
    const MeshFunction& u_n, const MeshFunction& u_hat, double t_half) {
    const Grid& g = ops_.grid();
    const std::size_t n = g.size();
    const auto& kn = kernels::active();

    // Constant right-hand side (I + A^2) U^n (+ (tau/2) g) in Fourier space.
    std::vector<std::complex<double>> rhs0(n);
    ops_.forward(u_n, rhs0.data());
    for (std::size_t i = 0; i < n; ++i) rhs0[i] *= one_plus_a2_[i];
    if (cfg_.source) {
        MeshFunction gsrc(g);
        for (int j2 = 0; j2 < g.n2; ++j2)
            for (int j1 = 0; j1 < g.n1; ++j1)
                gsrc(j1, j2) = 0.5 * cfg_.tau * cfg_.source(g.x(j1), g.y(j2), t_half);
        std::vector<std::complex<double>> ghat(n);
        ops_.forward(gsrc, ghat.data());
        for (std::size_t i = 0; i < n; ++i) rhs0[i] += ghat[i];
    }

    MeshFunction upow(g);
    kn.pow_int(u_hat.data(), cfg_.p, upow.data(), n);
    const double scale =
        std::max(1.0, norm_inf(u_n)) * std::max(1.0, norm_inf(upow));

    const double c = 0.5 * cfg_.tau / (cfg_.p + 2);
    MeshFunction u_l = u_n;
    MeshFunction lh_ul, u_next;
    MeshFunction a(g), b(g);
    std::vector<std::complex<double>> hat_a(n), hat_b(n), rhs(n);

    const std::vector<std::complex<double>>& lh_sym = ops_.sym_Lh().values;

    StepDiagnostics diag;
    for (int l = 0; l < cfg_.max_iter; ++l) {
        // Lh U^l in physical space, then the two halves of the skew-split
        // nonlinearity; Lh(u_hat^p . U^l) stays in Fourier space.
        lh_ul = ops_.apply_Lh(u_l);
        kn.mul(upow.data(), lh_ul.data(), a.data(), n);  // u_hat^p . Lh U^l
        kn.mul(upow.data(), u_l.data(), b.data(), n);    // u_hat^p . U^l
        ops_.forward(a, hat_a.data());
        ops_.forward(b, hat_b.data());
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = (rhs0[i] - c * (hat_a[i] + lh_sym[i] * hat_b[i])) * inv_m_[i];
        ops_.inverse_real(rhs.data(), u_next, scale);

        const double res = kn.max_abs_diff(u_next.data(), u_l.data(), n);
        diag.iterations_used = l + 1;
        diag.final_residual = res;
        if (!std::isfinite(res)) throw NonFinite();
        u_l = u_next;
        if (res < cfg_.iter_tol) return {std::move(u_l), diag};
    }
    throw NonConvergence(diag.final_residual, diag.iterations_used);
}

StepState Stepper::first_step(const MeshFunction& u0) {
    // The bootstrap freezes the whole right-hand side at the initial level,
    // source term included: g is taken at t = 0, not at the half step.
    auto [u_half, diag] = solve_halfstep(u0, u0, 0.0);
    StepState s;
    s.n = 1;
    s.p0 = momentum(ops_, u0);
    s.u_prev = u0;
    s.u_curr = MeshFunction(ops_.grid());
    kernels::active().axpby(2.0, u_half.data(), -1.0, u0.data(),
                            s.u_curr.data(), u0.size());
    s.t = cfg_.tau;
    return s;
}

StepDiagnostics Stepper::step(StepState& state) {
    if (!state.u_prev) throw std::logic_error("step requires two history levels");
    const std::size_t n = ops_.grid().size();
    const auto& kn = kernels::active();

    MeshFunction u_hat(ops_.grid());
    kn.axpby(1.5, state.u_curr.data(), -0.5, state.u_prev->data(),
             u_hat.data(), n);

    const double t_half = (state.n + 0.5) * cfg_.tau;
    auto [u_half, diag] = solve_halfstep(state.u_curr, u_hat, t_half);

    MeshFunction u_next(ops_.grid());
    kn.axpby(2.0, u_half.data(), -1.0, state.u_curr.data(), u_next.data(), n);

    state.u_prev = std::move(state.u_curr);
    state.u_curr = std::move(u_next);
    state.n += 1;
    state.t = state.n * cfg_.tau;
    diag.momentum = momentum(ops_, state.u_curr);
    return diag;
}

RunSummary run(SpectralOps& ops, const MeshFunction& u0, const SchemeConfig& cfg,
               double T, const StepObserver& observer) {
    const long m = std::llround(T / cfg.tau);
    if (m < 1 || std::abs(m * cfg.tau - T) > 1e-12 * std::max(1.0, std::abs(T)))
        throw std::invalid_argument("T must be a positive integer multiple of tau");

    Stepper stepper(ops, cfg);
    RunSummary summary;
    StepState state = stepper.first_step(u0);
    StepDiagnostics diag;
    diag.momentum = momentum(ops, state.u_curr);
    summary.diagnostics.push_back(diag);
    if (observer) observer(state, diag);
    for (long k = 1; k < m; ++k) {
        diag = stepper.step(state);
        summary.diagnostics.push_back(diag);
        summary.max_iterations_used =
            std::max(summary.max_iterations_used, diag.iterations_used);
        if (observer) observer(state, diag);
    }
    summary.final_state = std::move(state);
    return summary;
}

}  // namespace rkdv
