// Acceptance suite: end-to-end checks of the reference tables, conservation
// runs, and operator-level properties. Prints one PASS/FAIL line per
// criterion; exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rkdv/experiments.hpp"
#include "rkdv/stepper.hpp"

using namespace rkdv;

namespace {

constexpr double pi = 3.14159265358979323846;

struct Criterion {
    std::string label;
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
    void require_rel(double got, double ref, double tol, const std::string& what) {
        const double rel = std::abs(got - ref) / std::abs(ref);
        if (!(rel <= tol)) {
            pass = false;
            std::ostringstream os;
            os << what << ": got " << format_error(got) << ", ref "
               << format_error(ref) << ", rel dev " << format_error(rel);
            notes.push_back(os.str());
        }
    }
    void require_below(double got, double bound, const std::string& what) {
        if (!(got <= bound)) {
            pass = false;
            std::ostringstream os;
            os << what << ": got " << format_error(got) << ", bound "
               << format_error(bound);
            notes.push_back(os.str());
        }
    }
};

MeshFunction random_mesh(std::mt19937& rng, const Grid& g) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    MeshFunction u(g);
    for (auto& v : u.values) v = dist(rng);
    return u;
}

MeshFunction smooth_random(std::mt19937& rng, const Grid& g) {
    std::uniform_real_distribution<double> dist(-0.3, 0.3);
    const double c1 = dist(rng), c2 = dist(rng), c3 = dist(rng);
    return sample(g, [&](double x, double y) {
        return c1 * std::sin(x) * std::cos(y) + c2 * std::cos(2.0 * x) +
               c3 * std::sin(x + 2.0 * y);
    });
}

void check_temporal(Criterion& c, const char* problem, int n,
                    const std::vector<double>& taus,
                    const std::vector<double>& refs, double rate_lo,
                    double rate_hi) {
    ConvergenceReport r =
        temporal_convergence(problem_by_name(problem), n, taus, 1.0);
    for (std::size_t i = 0; i < refs.size(); ++i) {
        c.require_rel(r.rows[i].error_inf, refs[i], 0.05,
                      "e_inf(" + r.rows[i].resolution + ")");
        if (i > 0) {
            const double rate = r.rows[i].rate.value_or(0.0);
            std::ostringstream os;
            os << "rate(" << r.rows[i].resolution << ") = " << rate
               << " outside [" << rate_lo << ", " << rate_hi << "]";
            c.require(rate >= rate_lo && rate <= rate_hi, os.str());
        }
    }
}

// --- criteria -------------------------------------------------------------

Criterion criterion1() {
    Criterion c{"Table 1: soliton1d temporal convergence (N=1024, T=1)"};
    check_temporal(c, "soliton1d", 1024, {0.1, 0.05, 0.025, 0.0125},
                   {2.8001e-05, 6.9585e-06, 1.7341e-06, 4.3281e-07}, 1.95, 2.05);
    return c;
}

Criterion criterion2() {
    Criterion c{"Table 2: soliton1d spatial convergence (tau=1e-5, T=1)"};
    ConvergenceReport r = spatial_convergence(problem_by_name("soliton1d"), 1e-5,
                                              {16, 32, 64, 128, 256}, 1.0);
    const double refs[] = {1.7538e-02, 4.2655e-04, 2.3645e-08};
    for (int i = 0; i < 3; ++i)
        c.require_rel(r.rows[i].error_inf, refs[i], 0.05,
                      "e_inf(" + r.rows[i].resolution + ")");
    for (std::size_t i = 3; i < r.rows.size(); ++i)
        c.require_below(r.rows[i].error_inf, 1e-9,
                        "e_inf(" + r.rows[i].resolution + ") temporal floor");
    return c;
}

Criterion criterion3() {
    Criterion c{"Table 4: manufactured2d temporal convergence (N=100, T=1)"};
    check_temporal(c, "manufactured2d", 100, {0.1, 0.05, 0.025, 0.0125},
                   {4.6227e-03, 1.1709e-03, 2.9464e-04, 7.3903e-05}, 1.93, 2.05);
    return c;
}

Criterion criterion4() {
    Criterion c{"Table 5: manufactured2d spatial convergence (tau=1e-5, T=1)"};
    ConvergenceReport r =
        spatial_convergence(problem_by_name("manufactured2d"), 1e-5, {4, 8}, 1.0);
    c.require_rel(r.rows[0].error_inf, 7.9657e-05, 0.05, "e_inf(N=4)");
    c.require_below(r.rows[1].error_inf, 1e-9, "e_inf(N=8) floor");
    return c;
}

Criterion criterion5() {
    Criterion c{"momentum conservation to T=200 (soliton1d, periodic2d)"};
    {
        DriftReport r = momentum_drift(problem_by_name("soliton1d"), 1000, 0.1,
                                       200.0, 100);
        double max_rel = 0.0;
        for (const auto& s : r.samples)
            max_rel = std::max(max_rel, std::abs(s.drift) / r.p0);
        c.require_below(max_rel, 1e-10, "soliton1d max |P^n - P^0| / P^0");
    }
    {
        DriftReport r = momentum_drift(problem_by_name("periodic2d"), 50, 0.1,
                                       200.0, 100);
        double max_rel = 0.0;
        for (const auto& s : r.samples)
            max_rel = std::max(max_rel, std::abs(s.drift) / r.p0);
        c.require_below(max_rel, 1e-10, "periodic2d max |P^n - P^0| / P^0");
        std::ostringstream os;
        os << "periodic2d P0 = " << r.p0 << " outside 114.59 +/- 0.01";
        c.require(std::abs(r.p0 - 114.59) <= 0.01, os.str());
    }
    return c;
}

Criterion criterion6() {
    Criterion c{"norm-equivalence inequalities on random mesh functions"};
    std::mt19937 rng(601);
    const double slack = 1e-12;
    auto leq = [&](double lhs, double rhs, const std::string& what) {
        c.require(lhs <= rhs * (1.0 + slack) + slack, what);
    };

    for (int n : {4, 8, 16}) {
        std::vector<Grid> grids = {build_grid_1d(0.0, 2.0 * pi, n),
                                   build_grid_2d(0.0, 2.0 * pi, 0.0, 1.0, n, n)};
        for (const Grid& g : grids) {
            SpectralOps ops(g);

            // Entrywise eigenvalue comparisons: with s = sin(j*pi/N)^2 and
            // lamB = -(4/h^2) s, the chain is
            //   0 <= (4/pi^2) lam1^2 <= -(4/pi^2) lam2 <= -lamB <= -lam2
            // and (16/pi^4) lam2^2 <= lamB^2 <= lam2^2.
            const SpectralTable& t = ops.table();
            auto check_axis = [&](const std::vector<double>& d1i,
                                  const std::vector<double>& d2,
                                  const std::vector<double>& b, char axis) {
                for (std::size_t j = 0; j < d2.size(); ++j) {
                    const std::string at =
                        std::string("eig[") + axis + "][" + std::to_string(j) + "] ";
                    leq(0.0, (4.0 / (pi * pi)) * d1i[j] * d1i[j], at + "0 <= D1^2");
                    leq((4.0 / (pi * pi)) * d1i[j] * d1i[j],
                        -(4.0 / (pi * pi)) * d2[j], at + "D1^2 vs D2");
                    leq(-(4.0 / (pi * pi)) * d2[j], -b[j], at + "D2 vs B");
                    leq(-b[j], -d2[j], at + "B vs D2");
                    leq((16.0 / (pi * pi * pi * pi)) * d2[j] * d2[j], b[j] * b[j],
                        at + "D2^2 vs B^2");
                    leq(b[j] * b[j], d2[j] * d2[j], at + "B^2 vs D2^2");
                }
            };
            check_axis(t.d1x_imag, t.d2x, t.b1, 'x');
            if (g.dim == 2) check_axis(t.d1y_imag, t.d2y, t.b2, 'y');

            for (int trial = 0; trial < 1000 && c.pass; ++trial) {
                MeshFunction u = random_mesh(rng, g);
                const std::string at = "N=" + std::to_string(n) + " dim=" +
                                       std::to_string(g.dim) + ": ";
                leq(ops.norm_Lh(u), std::sqrt(2.0) * ops.seminorm_1h(u),
                    at + "||Lh U|| <= sqrt(2) |U|_1h");
                const double lap = norm_h(fd_laplacian(u));
                const double s2 = ops.seminorm_2h(u);
                leq(lap, s2, at + "||Dh U|| <= |U|_2h");
                leq(s2, (pi * pi / 4.0) * lap, at + "|U|_2h <= (pi^2/4)||Dh U||");
                leq(ops.seminorm_1h(u), (pi / 2.0) * fd_gradient_norm(u),
                    at + "|U|_1h <= (pi/2)||grad_h U||");
                const double gr = fd_gradient_norm(u);
                leq(gr * gr, norm_h(u) * fd_laplacian_norm(u),
                    at + "||grad_h U||^2 <= ||U|| ||Dh U||");
            }
        }
    }
    return c;
}

Criterion criterion7() {
    Criterion c{"fast path matches dense-matrix oracles (4x4, 8x8)"};
    std::mt19937 rng(701);
    for (int n : {4, 8}) {
        Grid g = build_grid_2d(0.0, 2.0 * pi, 0.0, 2.0 * pi, n, n);
        SpectralOps ops(g);
        MeshFunction u = random_mesh(rng, g);
        const std::string at = "N=" + std::to_string(n) + " ";

        auto compare = [&](const MeshFunction& got, const std::vector<double>& want,
                           double tol, const std::string& what) {
            double scale = 1.0, dev = 0.0;
            for (double w : want) scale = std::max(scale, std::abs(w));
            for (std::size_t i = 0; i < want.size(); ++i)
                dev = std::max(dev, std::abs(got.values[i] - want[i]));
            c.require_below(dev / scale, tol, what);
        };

        for (const std::string tag : {"A", "A2", "B", "Lh"}) {
            const auto want = oracle::apply_real(oracle::dense_operator(g, tag), u);
            const OperatorSymbol& sym = tag == "A"    ? ops.sym_A()
                                        : tag == "A2" ? ops.sym_A2()
                                        : tag == "B"  ? ops.sym_B()
                                                      : ops.sym_Lh();
            compare(ops.apply_symbol(sym, u), want, 1e-12, at + tag);
        }

        MeshFunction uhat = random_mesh(rng, g);
        MeshFunction v = random_mesh(rng, g);
        for (int p : {1, 2}) {
            const auto want = oracle::apply_real(oracle::dense_D(g, uhat, p), v);
            compare(ops.apply_D(uhat, v, p), want, 1e-12,
                    at + "D(U), p=" + std::to_string(p));
        }

        // Half-step solve against dense Gaussian elimination.
        SchemeConfig cfg;
        cfg.tau = 0.05;
        cfg.p = 2;
        Stepper st(ops, cfg);
        MeshFunction u_n = smooth_random(rng, g);
        MeshFunction u_ex = smooth_random(rng, g);
        auto [u_half, diag] = st.solve_halfstep(u_n, u_ex, 0.5 * cfg.tau);
        oracle::Mat m = oracle::identity(int(g.size()));
        m = oracle::add(m, oracle::dense_operator(g, "A2"));
        m = oracle::add(m, oracle::scale(0.5 * cfg.tau, oracle::dense_D(g, u_ex, cfg.p)));
        const auto rhs = oracle::apply_real(
            oracle::add(oracle::identity(int(g.size())), oracle::dense_operator(g, "A2")),
            u_n);
        const auto want = oracle::solve_real(m, rhs);
        compare(u_half, want, 1e-10, at + "solve_halfstep vs dense solve");
    }
    return c;
}

Criterion criterion8() {
    Criterion c{"skew-symmetry of D(U) and single-step momentum identity"};
    std::mt19937 rng(801);
    Grid g = build_grid_2d(0.0, 2.0 * pi, 0.0, 2.0 * pi, 8, 8);
    SpectralOps ops(g);
    for (int trial = 0; trial < 500 && c.pass; ++trial) {
        MeshFunction uhat = random_mesh(rng, g);
        MeshFunction v = random_mesh(rng, g);
        const int p = 1 + trial % 3;
        const MeshFunction dv = ops.apply_D(uhat, v, p);
        const double q = inner(dv, v);
        const double scale = std::max(1.0, norm_h(dv) * norm_h(v));
        c.require_below(std::abs(q) / scale, 1e-10,
                        "<D(U)V, V> at trial " + std::to_string(trial) +
                            ", p=" + std::to_string(p));
    }

    // One bootstrap step of the homogeneous scheme must preserve P to the
    // iteration tolerance.
    Grid g16 = build_grid_2d(0.0, 2.0 * pi, 0.0, 2.0 * pi, 16, 16);
    SpectralOps ops16(g16);
    SchemeConfig cfg;
    cfg.tau = 0.1;
    cfg.p = 2;
    for (int trial = 0; trial < 20; ++trial) {
        Stepper st(ops16, cfg);
        MeshFunction u0 = smooth_random(rng, g16);
        StepState s = st.first_step(u0);
        const double p1 = momentum(ops16, s.u_curr);
        c.require_below(std::abs(p1 - s.p0) / s.p0, 10.0 * cfg.iter_tol,
                        "|P^1 - P^0| / P^0 at trial " + std::to_string(trial));
    }
    return c;
}

}  // namespace

int main() {
    std::vector<std::function<Criterion()>> criteria = {
        criterion1, criterion2, criterion3, criterion4,
        criterion5, criterion6, criterion7, criterion8};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c = criteria[i]();
        std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << i + 1 << "/"
                  << criteria.size() << "] " << c.label << std::endl;
        for (const auto& note : c.notes) std::cout << "      " << note << '\n';
        if (!c.pass) ++failures;
    }
    return failures;
}
