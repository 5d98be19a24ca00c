#include "rkdv/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rkdv {

namespace {

using json = nlohmann::json;

SchemeConfig make_config(const Problem& prob, double tau, const SolverOptions& opts) {
    SchemeConfig cfg;
    cfg.tau = tau;
    cfg.p = prob.p;
    cfg.iter_tol = opts.iter_tol;
    cfg.max_iter = opts.max_iter;
    cfg.source = prob.source;
    return cfg;
}

double timed_error(const Problem& prob, int n, double tau, double T,
                   const SolverOptions& opts, double& wall_seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    Grid grid = prob.make_grid(n);
    SpectralOps ops(grid);
    MeshFunction u0 = sample_initial(grid, prob);
    RunSummary summary = run(ops, u0, make_config(prob, tau, opts), T);
    const double err = error_inf(summary.final_state.u_curr, prob, T);
    wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return err;
}

json rows_to_json(const ConvergenceReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json jr;
        jr["resolution"] = row.resolution;
        jr["error_inf"] = row.error_inf;
        if (row.rate)
            jr["rate"] = *row.rate;
        else
            jr["rate"] = nullptr;
        jr["wall_seconds"] = row.wall_seconds;
        rows.push_back(jr);
    }
    return rows;
}

}  // namespace

std::string format_error(double v) {
    std::ostringstream os;
    os.precision(5);
    os << std::scientific << v;
    return os.str();
}

ConvergenceReport temporal_convergence(const Problem& prob, int n,
                                       const std::vector<double>& taus, double T,
                                       const SolverOptions& opts) {
    for (std::size_t i = 1; i < taus.size(); ++i)
        if (!(taus[i] < taus[i - 1]))
            throw std::invalid_argument("taus must be strictly decreasing");

    ConvergenceReport report;
    report.axis = "temporal";
    report.problem = prob.name;
    report.params = "N=" + std::to_string(n) + ", T=" + std::to_string(T);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        ConvergenceRow row;
        row.resolution = "tau=" + std::to_string(taus[i]);
        row.error_inf = timed_error(prob, n, taus[i], T, opts, row.wall_seconds);
        if (i > 0)
            row.rate = std::log(report.rows[i - 1].error_inf / row.error_inf) /
                       std::log(taus[i - 1] / taus[i]);
        report.rows.push_back(std::move(row));
    }
    return report;
}

ConvergenceReport spatial_convergence(const Problem& prob, double tau,
                                      const std::vector<int>& ns, double T,
                                      const SolverOptions& opts) {
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] % 2 != 0) throw std::invalid_argument("N must be even");
        if (i > 0 && ns[i] <= ns[i - 1])
            throw std::invalid_argument("Ns must be strictly increasing");
    }

    ConvergenceReport report;
    report.axis = "spatial";
    report.problem = prob.name;
    {
        std::ostringstream p;
        p << "tau=" << tau << ", T=" << T;
        report.params = p.str();
    }
    for (std::size_t i = 0; i < ns.size(); ++i) {
        ConvergenceRow row;
        row.resolution = "N=" + std::to_string(ns[i]);
        row.error_inf = timed_error(prob, ns[i], tau, T, opts, row.wall_seconds);
        if (i > 0)
            row.rate = std::log(report.rows[i - 1].error_inf / row.error_inf) /
                       std::log(double(ns[i]) / double(ns[i - 1]));
        report.rows.push_back(std::move(row));
    }
    return report;
}

DriftReport momentum_drift(const Problem& prob, int n, double tau, double T,
                           int sample_every, const SolverOptions& opts) {
    if (prob.source)
        throw std::invalid_argument(
            "momentum is not conserved under forcing; drift runs require a "
            "homogeneous problem");
    if (sample_every < 1) throw std::invalid_argument("sample_every must be >= 1");

    Grid grid = prob.make_grid(n);
    SpectralOps ops(grid);
    MeshFunction u0 = sample_initial(grid, prob);

    DriftReport report;
    report.problem = prob.name;
    {
        std::ostringstream p;
        p << "N=" << n << ", tau=" << tau << ", T=" << T;
        report.params = p.str();
    }
    report.p0 = momentum(ops, u0);

    run(ops, u0, make_config(prob, tau, opts), T,
        [&](const StepState& state, const StepDiagnostics& diag) {
            if (state.n % sample_every == 0 || state.t >= T - 0.5 * tau)
                report.samples.push_back(
                    {state.t, diag.momentum, diag.momentum - report.p0});
        });
    return report;
}

void emit_csv(const ConvergenceReport& report, std::ostream& os) {
    os << "resolution,error_inf,rate,wall_seconds\n";
    for (const auto& row : report.rows) {
        os << row.resolution << ',' << format_error(row.error_inf) << ',';
        if (row.rate) {
            std::ostringstream r;
            r.precision(3);
            r << *row.rate;
            os << r.str();
        }
        os << ',' << row.wall_seconds << '\n';
    }
}

void emit_csv(const DriftReport& report, std::ostream& os) {
    os << "t,momentum,drift\n";
    for (const auto& s : report.samples)
        os << s.t << ',' << format_error(s.momentum) << ','
           << format_error(s.drift) << '\n';
}

void emit_json(const ConvergenceReport& report, std::ostream& os) {
    json j;
    j["metadata"] = {{"axis", report.axis},
                     {"problem", report.problem},
                     {"params", report.params}};
    j["rows"] = rows_to_json(report);
    os << j.dump(2) << '\n';
}

void emit_json(const DriftReport& report, std::ostream& os) {
    json j;
    j["metadata"] = {{"problem", report.problem},
                     {"params", report.params},
                     {"P0", report.p0}};
    json samples = json::array();
    for (const auto& s : report.samples)
        samples.push_back({{"t", s.t}, {"momentum", s.momentum}, {"drift", s.drift}});
    j["samples"] = samples;
    os << j.dump(2) << '\n';
}

ConvergenceReport parse_convergence_json(std::istream& is) {
    json j = json::parse(is);
    ConvergenceReport r;
    r.axis = j["metadata"]["axis"];
    r.problem = j["metadata"]["problem"];
    r.params = j["metadata"]["params"];
    for (const auto& jr : j["rows"]) {
        ConvergenceRow row;
        row.resolution = jr["resolution"];
        row.error_inf = jr["error_inf"];
        if (!jr["rate"].is_null()) row.rate = jr["rate"].get<double>();
        row.wall_seconds = jr["wall_seconds"];
        r.rows.push_back(std::move(row));
    }
    return r;
}

DriftReport parse_drift_json(std::istream& is) {
    json j = json::parse(is);
    DriftReport r;
    r.problem = j["metadata"]["problem"];
    r.params = j["metadata"]["params"];
    r.p0 = j["metadata"]["P0"];
    for (const auto& js : j["samples"])
        r.samples.push_back({js["t"], js["momentum"], js["drift"]});
    return r;
}

namespace {

template <class Report>
void emit_to_path(const Report& report, ReportFormat fmt, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    if (fmt == ReportFormat::csv)
        emit_csv(report, os);
    else
        emit_json(report, os);
}

}  // namespace

void emit(const ConvergenceReport& report, ReportFormat fmt, const std::string& path) {
    emit_to_path(report, fmt, path);
}

void emit(const DriftReport& report, ReportFormat fmt, const std::string& path) {
    emit_to_path(report, fmt, path);
}

}  // namespace rkdv
