#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rkdv {

/// Periodic tensor-product collocation grid. 1D problems are represented as a
/// degenerate 2D grid with n2 = 1 and unit h2, so the h1*h2 quadrature weight
/// reduces to h1 and all y-axis operators become identities.
struct Grid {
    int dim = 1;
    int n1 = 0, n2 = 1;
    double x_left = 0.0, x_right = 0.0;
    double y_left = 0.0, y_right = 0.0;
    double h1 = 0.0, h2 = 1.0;   // mesh sizes
    double mu1 = 0.0, mu2 = 0.0; // wavenumber scalings 2*pi/l

    std::size_t size() const { return std::size_t(n1) * std::size_t(n2); }
    double x(int j1) const { return x_left + j1 * h1; }
    double y(int j2) const { return y_left + j2 * h2; }

    bool operator==(const Grid&) const = default;
};

Grid build_grid_1d(double x_left, double x_right, int n1);
Grid build_grid_2d(double x_left, double x_right, double y_left, double y_right,
                   int n1, int n2);

/// Real-valued mesh function sampled at collocation points, stored with j1
/// varying fastest (columnwise layout).
struct MeshFunction {
    Grid grid;
    std::vector<double> values;

    MeshFunction() = default;
    explicit MeshFunction(const Grid& g) : grid(g), values(g.size(), 0.0) {}

    double& operator()(int j1, int j2) { return values[std::size_t(j2) * grid.n1 + j1]; }
    double operator()(int j1, int j2) const { return values[std::size_t(j2) * grid.n1 + j1]; }

    // Access with periodic index wraparound (any integer indices).
    double at_periodic(int j1, int j2) const {
        const int i1 = ((j1 % grid.n1) + grid.n1) % grid.n1;
        const int i2 = ((j2 % grid.n2) + grid.n2) % grid.n2;
        return values[std::size_t(i2) * grid.n1 + i1];
    }

    double* data() { return values.data(); }
    const double* data() const { return values.data(); }
    std::size_t size() const { return values.size(); }
};

/// Sample f(x, y) at the collocation points.
MeshFunction sample(const Grid& g, const std::function<double(double, double)>& f);

enum class Axis { X, Y };

double inner(const MeshFunction& u, const MeshFunction& v);
double norm_h(const MeshFunction& u);
double norm_inf(const MeshFunction& u);

MeshFunction fd_diff_forward(const MeshFunction& u, Axis axis);
MeshFunction fd_diff_backward(const MeshFunction& u, Axis axis);
MeshFunction fd_laplacian(const MeshFunction& u);

double fd_gradient_norm(const MeshFunction& u);
double fd_laplacian_norm(const MeshFunction& u);
double norm_H2(const MeshFunction& u);

}  // namespace rkdv
