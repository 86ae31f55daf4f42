#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace deformlab {

/// Scalar samples on a uniform node lattice over the unit square.
/// Node (i, j) sits at (i * hx(), j * hy()); values are stored row-major,
/// values[j * nx + i]. Lattices need at least 3 nodes per side so that
/// central differences have interior points.
struct ScalarField2D {
    int nx = 0;
    int ny = 0;
    std::vector<double> values;

    ScalarField2D() = default;
    ScalarField2D(int nx_, int ny_, double fill = 0.0);

    double hx() const { return 1.0 / (nx - 1); }
    double hy() const { return 1.0 / (ny - 1); }

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }

    std::size_t size() const { return values.size(); }
};

/// Two-component velocity samples on the same lattice layout as ScalarField2D.
struct VectorField2D {
    int nx = 0;
    int ny = 0;
    std::vector<double> ux;
    std::vector<double> uy;

    VectorField2D() = default;
    VectorField2D(int nx_, int ny_);

    double& x(int i, int j) { return ux[static_cast<std::size_t>(j) * nx + i]; }
    double x(int i, int j) const { return ux[static_cast<std::size_t>(j) * nx + i]; }
    double& y(int i, int j) { return uy[static_cast<std::size_t>(j) * nx + i]; }
    double y(int i, int j) const { return uy[static_cast<std::size_t>(j) * nx + i]; }
};

/// Node positions of a deformed structured grid: the map sampled at the
/// reference lattice nodes. Coordinates stay inside [0,1]^2; boundary nodes
/// stay on their original wall.
struct Grid2D {
    int nx = 0;
    int ny = 0;
    std::vector<double> px;
    std::vector<double> py;
    int steps = 0;            ///< time steps used to produce this grid
    std::string scheme;       ///< integrator name, e.g. "rk4"

    Grid2D() = default;
    Grid2D(int nx_, int ny_);

    static Grid2D identity(int nx_, int ny_);

    double hx() const { return 1.0 / (nx - 1); }
    double hy() const { return 1.0 / (ny - 1); }

    double& x(int i, int j) { return px[static_cast<std::size_t>(j) * nx + i]; }
    double x(int i, int j) const { return px[static_cast<std::size_t>(j) * nx + i]; }
    double& y(int i, int j) { return py[static_cast<std::size_t>(j) * nx + i]; }
    double y(int i, int j) const { return py[static_cast<std::size_t>(j) * nx + i]; }
};

/// Compensated (Kahan) sum; keeps node-average checks accurate on large lattices.
double kahan_sum(const double* data, std::size_t n);

/// Plain node average with equal weights, 1/N * sum(values).
double discrete_mean(const ScalarField2D& f);

/// Node average of 1/f, the discrete form of the integral compatibility constraint.
double discrete_mean_reciprocal(const ScalarField2D& f);

bool all_finite(const ScalarField2D& f);

void min_max(const ScalarField2D& f, double& lo, double& hi);

}  // namespace deformlab
