#include "rkdv/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace rkdv {

namespace {

constexpr double pi = 3.14159265358979323846;

double sech(double z) { return 1.0 / std::cosh(z); }

}  // namespace

Grid Problem::make_grid(int n) const {
    if (dim == 1) return build_grid_1d(x_left, x_right, n);
    return build_grid_2d(x_left, x_right, y_left, y_right, n, n);
}

Problem rkdv1d_soliton() {
    const double amp = -35.0 / 24.0 + (35.0 / 312.0) * std::sqrt(313.0);
    const double width = std::sqrt(-26.0 + 2.0 * std::sqrt(313.0)) / 24.0;
    const double speed = 0.5 + std::sqrt(313.0) / 26.0;

    Problem prob;
    prob.name = "soliton1d";
    prob.dim = 1;
    prob.x_left = -50.0;
    prob.x_right = 50.0;
    prob.p = 1;
    prob.exact = [=](double x, double, double t) {
        const double s = sech(width * (x - speed * t));
        return amp * s * s * s * s;
    };
    prob.initial = [exact = prob.exact](double x, double y) {
        return exact(x, y, 0.0);
    };
    return prob;
}

Problem grkdv2d_manufactured() {
    Problem prob;
    prob.name = "manufactured2d";
    prob.dim = 2;
    prob.x_left = 0.0;
    prob.x_right = 1.0;
    prob.y_left = 0.0;
    prob.y_right = 1.0;
    prob.p = 2;
    prob.exact = [](double x, double y, double t) {
        return std::sin(2.0 * pi * x) * std::sin(2.0 * pi * y) * std::exp(-t);
    };
    prob.initial = [exact = prob.exact](double x, double y) {
        return exact(x, y, 0.0);
    };
    const int p = prob.p;
    prob.source = [p](double x, double y, double t) {
        const double pi4 = pi * pi * pi * pi;
        const double sx = std::sin(2.0 * pi * x), sy = std::sin(2.0 * pi * y);
        const double et = std::exp(-t);
        return sx * sy * et * (-64.0 * pi4 - 1.0) -
               16.0 * pi * pi * pi * std::cos(2.0 * pi * x) * sy * et +
               2.0 * pi * et * std::sin(2.0 * pi * (x + y)) *
                   (1.0 + std::pow(sx, p) * std::pow(sy, p) * std::exp(-p * t));
    };
    return prob;
}

Problem grkdv2d_periodic() {
    Problem prob;
    prob.name = "periodic2d";
    prob.dim = 2;
    prob.x_left = 0.0;
    prob.x_right = 2.0 * pi;
    prob.y_left = 0.0;
    prob.y_right = 2.0 * pi;
    prob.p = 2;
    prob.initial = [](double x, double y) {
        return 0.1 * (1.0 + std::sin(3.0 * x) * std::sin(5.0 * y));
    };
    return prob;
}

Problem problem_by_name(const std::string& name) {
    if (name == "soliton1d") return rkdv1d_soliton();
    if (name == "manufactured2d") return grkdv2d_manufactured();
    if (name == "periodic2d") return grkdv2d_periodic();
    throw std::invalid_argument("unknown problem: " + name);
}

MeshFunction sample_initial(const Grid& g, const Problem& prob) {
    return sample(g, prob.initial);
}

MeshFunction sample_exact(const Grid& g, const Problem& prob, double t) {
    if (!prob.exact)
        throw std::invalid_argument(prob.name + " has no exact solution");
    return sample(g, [&](double x, double y) { return prob.exact(x, y, t); });
}

double error_inf(const MeshFunction& u, const Problem& prob, double t) {
    MeshFunction ex = sample_exact(u.grid, prob, t);
    double m = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        m = std::max(m, std::abs(u.values[i] - ex.values[i]));
    return m;
}

}  // namespace rkdv
