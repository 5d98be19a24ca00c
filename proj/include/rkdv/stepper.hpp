#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "rkdv/spectral.hpp"

namespace rkdv {

struct SchemeConfig {
    double tau = 0.0;        // time step
    int p = 1;               // nonlinearity power
    double iter_tol = 1e-14; // fixed-point stopping tolerance (infinity norm)
    int max_iter = 200;
    std::function<double(double, double, double)> source;  // g(x, y, t), optional
};

struct StepDiagnostics {
    int iterations_used = 0;
    double final_residual = 0.0;
    double momentum = 0.0;
};

/// Two-level history (U^{n-1}, U^n) required by the three-level scheme.
struct StepState {
    int n = 0;
    std::optional<MeshFunction> u_prev;
    MeshFunction u_curr;
    double p0 = 0.0;  // initial momentum
    double t = 0.0;
};

struct NonConvergence : std::runtime_error {
    double residual;
    NonConvergence(double r, int iters)
        : std::runtime_error("fixed-point iteration did not converge after " +
                             std::to_string(iters) +
                             " sweeps (residual " + std::to_string(r) + ")"),
          residual(r) {}
};

struct NonFinite : std::runtime_error {
    NonFinite() : std::runtime_error("iterate contains NaN/Inf") {}
};

/// Discrete momentum P = ||U||_h^2 + |U|_{2,h}^2, the invariant the scheme
/// conserves exactly for homogeneous problems.
double momentum(SpectralOps& ops, const MeshFunction& u);

/// Symbol of I + A^2 + (tau/2)(B + Lh), the constant left-hand side of the
/// half-step iteration. Real part is 1 + (lam2x + lam2y)^2 >= 1, so the
/// diagonal solve is always well posed.
OperatorSymbol timestep_symbol(const SpectralTable& table, double tau);

class Stepper {
public:
    Stepper(SpectralOps& ops, SchemeConfig cfg);

    const SchemeConfig& config() const { return cfg_; }

    /// Fixed-point solve of the implicit half-step equation
    ///   (I + A^2 + (tau/2) D(u_hat)) U_half = (I + A^2) U_n + (tau/2) g
    /// with the nonlinear product lagged and the constant part inverted
    /// diagonally in Fourier space.
    std::pair<MeshFunction, StepDiagnostics> solve_halfstep(
        const MeshFunction& u_n, const MeshFunction& u_hat, double t_half);

    /// Bootstrap step: the right-hand side is frozen at the initial level
    /// (coefficient U^0 and source g(., 0)), then U^1 = 2 U^{1/2} - U^0.
    StepState first_step(const MeshFunction& u0);

    /// Three-level step with extrapolation u_hat = (3 U^n - U^{n-1})/2.
    StepDiagnostics step(StepState& state);

private:
    SpectralOps& ops_;
    SchemeConfig cfg_;
    OperatorSymbol m_;
    std::vector<std::complex<double>> inv_m_;
    std::vector<double> one_plus_a2_;
};

struct RunSummary {
    StepState final_state;
    std::vector<StepDiagnostics> diagnostics;  // one per step, bootstrap first
    int max_iterations_used = 0;
};

using StepObserver =
    std::function<void(const StepState&, const StepDiagnostics&)>;

/// Drive first_step then step until t = T = M*tau (M must be integral within
/// round-off). The observer, when set, is invoked after every step.
RunSummary run(SpectralOps& ops, const MeshFunction& u0, const SchemeConfig& cfg,
               double T, const StepObserver& observer = {});

}  // namespace rkdv
