#pragma once

#include <functional>
#include <string>

#include "rkdv/grid.hpp"

namespace rkdv {

/// A test problem: initial data plus, where available, the exact solution and
/// the manufactured source term.
struct Problem {
    std::string name;
    int dim = 1;
    double x_left = 0.0, x_right = 0.0;
    double y_left = 0.0, y_right = 0.0;
    int p = 1;
    std::function<double(double, double)> initial;
    std::function<double(double, double, double)> exact;   // optional
    std::function<double(double, double, double)> source;  // optional

    Grid make_grid(int n) const;
};

/// Solitary wave of the 1D Rosenau-KdV equation on [-50, 50], p = 1.
Problem rkdv1d_soliton();

/// Manufactured 2D solution sin(2*pi*x) sin(2*pi*y) exp(-t) on [0,1]^2 with
/// the compensating source term, p = 2.
Problem grkdv2d_manufactured();

/// Homogeneous 2D problem with initial data 0.1 (1 + sin(3x) sin(5y)) on
/// [0, 2*pi]^2, p = 2; no exact solution.
Problem grkdv2d_periodic();

/// Lookup by CLI name: "soliton1d", "manufactured2d", "periodic2d".
Problem problem_by_name(const std::string& name);

MeshFunction sample_initial(const Grid& g, const Problem& prob);
MeshFunction sample_exact(const Grid& g, const Problem& prob, double t);

/// Max over collocation points of |U - exact(., t)|.
double error_inf(const MeshFunction& u, const Problem& prob, double t);

}  // namespace rkdv
