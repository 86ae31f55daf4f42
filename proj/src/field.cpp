#include "deformlab/field.hpp"

#include <cmath>
#include <stdexcept>

namespace deformlab {

namespace {

std::size_t checked_count(int nx, int ny) {
    if (nx < 3 || ny < 3)
        throw std::invalid_argument("lattice needs at least 3 nodes per side");
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
}

}  // namespace

ScalarField2D::ScalarField2D(int nx_, int ny_, double fill)
    : nx(nx_), ny(ny_), values(checked_count(nx_, ny_), fill) {}

VectorField2D::VectorField2D(int nx_, int ny_)
    : nx(nx_), ny(ny_),
      ux(checked_count(nx_, ny_), 0.0),
      uy(checked_count(nx_, ny_), 0.0) {}

Grid2D::Grid2D(int nx_, int ny_)
    : nx(nx_), ny(ny_),
      px(checked_count(nx_, ny_), 0.0),
      py(checked_count(nx_, ny_), 0.0) {}

Grid2D Grid2D::identity(int nx_, int ny_) {
    Grid2D g(nx_, ny_);
    const double hx = g.hx();
    const double hy = g.hy();
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            g.x(i, j) = i * hx;
            g.y(i, j) = j * hy;
        }
    g.scheme = "identity";
    return g;
}

double kahan_sum(const double* data, std::size_t n) {
    double sum = 0.0;
    double carry = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double y = data[k] - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double discrete_mean(const ScalarField2D& f) {
    return kahan_sum(f.values.data(), f.values.size()) /
           static_cast<double>(f.values.size());
}

double discrete_mean_reciprocal(const ScalarField2D& f) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : f.values) {
        const double y = 1.0 / v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(f.values.size());
}

bool all_finite(const ScalarField2D& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

void min_max(const ScalarField2D& f, double& lo, double& hi) {
    lo = f.values.front();
    hi = f.values.front();
    for (double v : f.values) {
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
}

}  // namespace deformlab
