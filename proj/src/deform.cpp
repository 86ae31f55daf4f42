#include "deformlab/deform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "deformlab/features.hpp"

namespace deformlab {

namespace {

struct CellPos {
    int i, j;
    double s, t;  // local coordinates in the containing cell
};

inline CellPos locate(int nx, int ny, double x, double y) {
    x = std::clamp(x, 0.0, 1.0);
    y = std::clamp(y, 0.0, 1.0);
    double gx = x * (nx - 1);
    double gy = y * (ny - 1);
    int i = static_cast<int>(gx);
    int j = static_cast<int>(gy);
    if (i > nx - 2) i = nx - 2;
    if (j > ny - 2) j = ny - 2;
    return CellPos{i, j, gx - i, gy - j};
}

inline double lerp_cell(const std::vector<double>& v, int nx, const CellPos& c) {
    const std::size_t k = static_cast<std::size_t>(c.j) * nx + c.i;
    const double a = v[k] + c.s * (v[k + 1] - v[k]);
    const double b = v[k + nx] + c.s * (v[k + nx + 1] - v[k + nx]);
    return a + c.t * (b - a);
}

}  // namespace

double sample_scalar(const ScalarField2D& f, double x, double y) {
    return lerp_cell(f.values, f.nx, locate(f.nx, f.ny, x, y));
}

double sample_monitor(const ScalarField2D& f, double x, double y) {
    const CellPos c = locate(f.nx, f.ny, x, y);
    const std::size_t k = static_cast<std::size_t>(c.j) * f.nx + c.i;
    const auto& v = f.values;
    const double r00 = 1.0 / v[k], r10 = 1.0 / v[k + 1];
    const double r01 = 1.0 / v[k + f.nx], r11 = 1.0 / v[k + f.nx + 1];
    const double a = r00 + c.s * (r10 - r00);
    const double b = r01 + c.s * (r11 - r01);
    return 1.0 / (a + c.t * (b - a));
}

std::array<double, 2> sample_vector(const VectorField2D& u, double x, double y) {
    const CellPos c = locate(u.nx, u.ny, x, y);
    return {lerp_cell(u.ux, u.nx, c), lerp_cell(u.uy, u.nx, c)};
}

Grid2D integrate_deformation(const MonitorPair& pair, const VectorField2D& u,
                             int steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    const int nx = pair.f0.nx, ny = pair.f0.ny;
    if (nx != pair.f1.nx || ny != pair.f1.ny || nx != u.nx || ny != u.ny)
        throw DimensionMismatch("monitor pair and velocity lattices disagree");

    // precomputed reciprocals; space and time interpolation both act on 1/f
    std::vector<double> r0(pair.f0.values.size()), r1(pair.f1.values.size());
    for (std::size_t k = 0; k < r0.size(); ++k) {
        r0[k] = 1.0 / pair.f0.values[k];
        r1[k] = 1.0 / pair.f1.values[k];
    }

    const double dt = 1.0 / steps;
    Grid2D grid(nx, ny);
    grid.steps = steps;
    grid.scheme = "rk4";
    const double hx = grid.hx();
    const double hy = grid.hy();

    for (int j = 0; j < ny; ++j) {
        const bool wall_b = (j == 0), wall_t = (j == ny - 1);
        for (int i = 0; i < nx; ++i) {
            const bool wall_l = (i == 0), wall_r = (i == nx - 1);

            auto project = [&](double& x, double& y) {
                x = std::clamp(x, 0.0, 1.0);
                y = std::clamp(y, 0.0, 1.0);
                if (wall_l) x = 0.0;
                if (wall_r) x = 1.0;
                if (wall_b) y = 0.0;
                if (wall_t) y = 1.0;
            };
            auto velocity = [&](double x, double y, double t, double& fx,
                                double& fy) {
                const CellPos c = locate(nx, ny, x, y);
                const double rec = (1.0 - t) * lerp_cell(r0, nx, c) +
                                   t * lerp_cell(r1, nx, c);
                const double f = 1.0 / rec;
                fx = f * lerp_cell(u.ux, nx, c);
                fy = f * lerp_cell(u.uy, nx, c);
            };

            double x = i * hx, y = j * hy;
            for (int n = 0; n < steps; ++n) {
                const double t = n * dt;
                double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y;
                velocity(x, y, t, k1x, k1y);

                double qx = x + 0.5 * dt * k1x, qy = y + 0.5 * dt * k1y;
                project(qx, qy);
                velocity(qx, qy, t + 0.5 * dt, k2x, k2y);

                qx = x + 0.5 * dt * k2x;
                qy = y + 0.5 * dt * k2y;
                project(qx, qy);
                velocity(qx, qy, t + 0.5 * dt, k3x, k3y);

                qx = x + dt * k3x;
                qy = y + dt * k3y;
                project(qx, qy);
                velocity(qx, qy, t + dt, k4x, k4y);

                x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
                y += dt / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
                project(x, y);
            }
            grid.x(i, j) = x;
            grid.y(i, j) = y;
        }
    }

    const ScalarField2D jac = jacobian_determinant(grid);
    double min_j = jac.at(1, 1);
    for (int j = 1; j < ny - 1; ++j)
        for (int i = 1; i < nx - 1; ++i)
            min_j = std::min(min_j, jac.at(i, j));
    if (!(min_j > 0.0))
        throw FoldDetected(
            "deformed grid folded (non-positive interior Jacobian determinant); "
            "increase --steps or reduce --alpha",
            std::move(grid), min_j);
    return grid;
}

}  // namespace deformlab
