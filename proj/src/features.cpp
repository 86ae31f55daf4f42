#include "deformlab/features.hpp"

#include <cmath>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

// d/dxi along rows: central at interior columns, second-order one-sided at
// the walls. exact for affine node data either way.
inline double d_xi(const Grid2D& g, const std::vector<double>& q, int i, int j) {
    const int nx = g.nx;
    const std::size_t k = static_cast<std::size_t>(j) * nx + i;
    const double i2h = 1.0 / (2.0 * g.hx());
    if (i == 0) return (-3.0 * q[k] + 4.0 * q[k + 1] - q[k + 2]) * i2h;
    if (i == nx - 1) return (3.0 * q[k] - 4.0 * q[k - 1] + q[k - 2]) * i2h;
    return (q[k + 1] - q[k - 1]) * i2h;
}

inline double d_eta(const Grid2D& g, const std::vector<double>& q, int i, int j) {
    const int nx = g.nx, ny = g.ny;
    const std::size_t k = static_cast<std::size_t>(j) * nx + i;
    const std::size_t s = nx;
    const double i2h = 1.0 / (2.0 * g.hy());
    if (j == 0) return (-3.0 * q[k] + 4.0 * q[k + s] - q[k + 2 * s]) * i2h;
    if (j == ny - 1) return (3.0 * q[k] - 4.0 * q[k - s] + q[k - 2 * s]) * i2h;
    return (q[k + s] - q[k - s]) * i2h;
}

}  // namespace

ScalarField2D jacobian_determinant(const Grid2D& grid) {
    ScalarField2D out(grid.nx, grid.ny);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const double xxi = d_xi(grid, grid.px, i, j);
            const double xeta = d_eta(grid, grid.px, i, j);
            const double yxi = d_xi(grid, grid.py, i, j);
            const double yeta = d_eta(grid, grid.py, i, j);
            out.at(i, j) = xxi * yeta - xeta * yxi;
        }
    return out;
}

ScalarField2D curl_of_map(const Grid2D& grid) {
    Grid2D disp(grid.nx, grid.ny);
    const double hx = grid.hx(), hy = grid.hy();
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            disp.x(i, j) = grid.x(i, j) - i * hx;
            disp.y(i, j) = grid.y(i, j) - j * hy;
        }
    ScalarField2D out(grid.nx, grid.ny);
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            out.at(i, j) = d_xi(grid, disp.py, i, j) - d_eta(grid, disp.px, i, j);
    return out;
}

GrayImage render_feature_image(const ScalarField2D& field) {
    if (!all_finite(field))
        throw NonFiniteField("feature field contains non-finite values");
    double lo, hi;
    min_max(field, lo, hi);
    GrayImage img(field.nx, field.ny);
    if (lo == hi) {
        for (auto& p : img.pixels) p = 128;
        return img;
    }
    const double scale = 255.0 / (hi - lo);
    for (std::size_t k = 0; k < field.values.size(); ++k) {
        const double z = std::floor((field.values[k] - lo) * scale + 0.5);
        img.pixels[k] = static_cast<std::uint8_t>(z < 0.0 ? 0.0 : (z > 255.0 ? 255.0 : z));
    }
    return img;
}

FeatureMaps feature_maps(const GrayImage& img, double alpha, int steps,
                         const SolverOptions& opts) {
    ScalarField2D f1 = image_to_monitor(img, alpha);
    MonitorPair pair = make_monitor_pair(uniform_monitor(img.width, img.height),
                                         std::move(f1));
    const VectorField2D u = velocity_from_monitor(pair, opts);
    Grid2D grid = integrate_deformation(pair, u, steps);
    FeatureMaps maps;
    maps.jd = jacobian_determinant(grid);
    maps.cv = curl_of_map(grid);
    maps.grid = std::move(grid);
    return maps;
}

ScalarField2D cv_feature_map(const GrayImage& img, double alpha, int steps,
                             const SolverOptions& opts) {
    return feature_maps(img, alpha, steps, opts).cv;
}

}  // namespace deformlab
