#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rkdv/problems.hpp"
#include "rkdv/stepper.hpp"

namespace rkdv {

struct SolverOptions {
    double iter_tol = 1e-14;
    int max_iter = 200;
};

struct ConvergenceRow {
    std::string resolution;  // "tau=0.1" or "N=64"
    double error_inf = 0.0;
    std::optional<double> rate;
    double wall_seconds = 0.0;
};

struct ConvergenceReport {
    std::string axis;  // "temporal" | "spatial"
    std::string problem;
    std::string params;
    std::vector<ConvergenceRow> rows;
};

struct DriftSample {
    double t = 0.0;
    double momentum = 0.0;
    double drift = 0.0;  // P^n - P^0
};

struct DriftReport {
    std::string problem;
    std::string params;
    double p0 = 0.0;
    std::vector<DriftSample> samples;
};

/// One run per tau at fixed N; errors via error_inf at t = T, rates from
/// consecutive pairs.
ConvergenceReport temporal_convergence(const Problem& prob, int n,
                                       const std::vector<double>& taus, double T,
                                       const SolverOptions& opts = {});

/// One run per N at fixed tau; spatial rates use log(e ratio)/log(N ratio).
ConvergenceReport spatial_convergence(const Problem& prob, double tau,
                                      const std::vector<int>& ns, double T,
                                      const SolverOptions& opts = {});

/// Momentum samples every sample_every steps; rejects forced problems.
DriftReport momentum_drift(const Problem& prob, int n, double tau, double T,
                           int sample_every = 10, const SolverOptions& opts = {});

void emit_csv(const ConvergenceReport& report, std::ostream& os);
void emit_csv(const DriftReport& report, std::ostream& os);
void emit_json(const ConvergenceReport& report, std::ostream& os);
void emit_json(const DriftReport& report, std::ostream& os);

ConvergenceReport parse_convergence_json(std::istream& is);
DriftReport parse_drift_json(std::istream& is);

enum class ReportFormat { csv, json };

void emit(const ConvergenceReport& report, ReportFormat fmt, const std::string& path);
void emit(const DriftReport& report, ReportFormat fmt, const std::string& path);

/// Paper-style formatting: 6 significant digits, scientific.
std::string format_error(double v);

}  // namespace rkdv
