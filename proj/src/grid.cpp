#include "rkdv/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "rkdv/kernels.hpp"

namespace rkdv {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

void check_axis(int n, double lo, double hi, const char* name) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument(std::string(name) + " must be even and >= 4");
    if (!(hi > lo))
        throw std::invalid_argument(std::string(name) + ": empty range");
}

void check_same_grid(const MeshFunction& u, const MeshFunction& v) {
    if (!(u.grid == v.grid)) throw std::invalid_argument("grid mismatch");
}

}  // namespace

Grid build_grid_1d(double x_left, double x_right, int n1) {
    check_axis(n1, x_left, x_right, "N1");
    Grid g;
    g.dim = 1;
    g.n1 = n1;
    g.n2 = 1;
    g.x_left = x_left;
    g.x_right = x_right;
    g.h1 = (x_right - x_left) / n1;
    g.h2 = 1.0;  // placeholder weight, no physical meaning
    g.mu1 = two_pi / (x_right - x_left);
    g.mu2 = 0.0;
    return g;
}

Grid build_grid_2d(double x_left, double x_right, double y_left, double y_right,
                   int n1, int n2) {
    check_axis(n1, x_left, x_right, "N1");
    check_axis(n2, y_left, y_right, "N2");
    Grid g;
    g.dim = 2;
    g.n1 = n1;
    g.n2 = n2;
    g.x_left = x_left;
    g.x_right = x_right;
    g.y_left = y_left;
    g.y_right = y_right;
    g.h1 = (x_right - x_left) / n1;
    g.h2 = (y_right - y_left) / n2;
    g.mu1 = two_pi / (x_right - x_left);
    g.mu2 = two_pi / (y_right - y_left);
    return g;
}

MeshFunction sample(const Grid& g, const std::function<double(double, double)>& f) {
    MeshFunction u(g);
    for (int j2 = 0; j2 < g.n2; ++j2)
        for (int j1 = 0; j1 < g.n1; ++j1) u(j1, j2) = f(g.x(j1), g.y(j2));
    return u;
}

double inner(const MeshFunction& u, const MeshFunction& v) {
    check_same_grid(u, v);
    return u.grid.h1 * u.grid.h2 *
           kernels::active().dot(u.data(), v.data(), u.size());
}

double norm_h(const MeshFunction& u) { return std::sqrt(inner(u, u)); }

double norm_inf(const MeshFunction& u) {
    return kernels::active().max_abs(u.data(), u.size());
}

MeshFunction fd_diff_forward(const MeshFunction& u, Axis axis) {
    const Grid& g = u.grid;
    if (axis == Axis::Y && g.dim == 1)
        throw std::invalid_argument("y-axis inactive on a 1D grid");
    MeshFunction w(g);
    if (axis == Axis::X) {
        const double inv = 1.0 / g.h1;
        for (int j2 = 0; j2 < g.n2; ++j2)
            for (int j1 = 0; j1 < g.n1; ++j1)
                w(j1, j2) = (u((j1 + 1) % g.n1, j2) - u(j1, j2)) * inv;
    } else {
        const double inv = 1.0 / g.h2;
        for (int j2 = 0; j2 < g.n2; ++j2)
            for (int j1 = 0; j1 < g.n1; ++j1)
                w(j1, j2) = (u(j1, (j2 + 1) % g.n2) - u(j1, j2)) * inv;
    }
    return w;
}

MeshFunction fd_diff_backward(const MeshFunction& u, Axis axis) {
    const Grid& g = u.grid;
    if (axis == Axis::Y && g.dim == 1)
        throw std::invalid_argument("y-axis inactive on a 1D grid");
    MeshFunction w(g);
    if (axis == Axis::X) {
        const double inv = 1.0 / g.h1;
        for (int j2 = 0; j2 < g.n2; ++j2)
            for (int j1 = 0; j1 < g.n1; ++j1)
                w(j1, j2) = (u(j1, j2) - u((j1 + g.n1 - 1) % g.n1, j2)) * inv;
    } else {
        const double inv = 1.0 / g.h2;
        for (int j2 = 0; j2 < g.n2; ++j2)
            for (int j1 = 0; j1 < g.n1; ++j1)
                w(j1, j2) = (u(j1, j2) - u(j1, (j2 + g.n2 - 1) % g.n2)) * inv;
    }
    return w;
}

MeshFunction fd_laplacian(const MeshFunction& u) {
    const Grid& g = u.grid;
    MeshFunction w(g);
    const double ix = 1.0 / (g.h1 * g.h1);
    const double iy = 1.0 / (g.h2 * g.h2);
    for (int j2 = 0; j2 < g.n2; ++j2) {
        for (int j1 = 0; j1 < g.n1; ++j1) {
            double s = (u((j1 + 1) % g.n1, j2) - 2.0 * u(j1, j2) +
                        u((j1 + g.n1 - 1) % g.n1, j2)) * ix;
            if (g.dim == 2)
                s += (u(j1, (j2 + 1) % g.n2) - 2.0 * u(j1, j2) +
                      u(j1, (j2 + g.n2 - 1) % g.n2)) * iy;
            w(j1, j2) = s;
        }
    }
    return w;
}

double fd_gradient_norm(const MeshFunction& u) {
    double s = 0.0;
    MeshFunction dx = fd_diff_forward(u, Axis::X);
    s += inner(dx, dx);
    if (u.grid.dim == 2) {
        MeshFunction dy = fd_diff_forward(u, Axis::Y);
        s += inner(dy, dy);
    }
    return std::sqrt(s);
}

double fd_laplacian_norm(const MeshFunction& u) { return norm_h(fd_laplacian(u)); }

double norm_H2(const MeshFunction& u) {
    const double a = norm_h(u);
    const double b = fd_gradient_norm(u);
    const double c = fd_laplacian_norm(u);
    return std::sqrt(a * a + b * b + c * c);
}

}  // namespace rkdv
