#include "deformlab/poisson.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

constexpr double kCompatTol = 1e-8;

// FFTW planning is not thread-safe; execution on distinct plans is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

// Unnormalized DCT-I in both dimensions, in place. Applying it twice scales
// the data by 4*(nx-1)*(ny-1).
void dct1_2d(std::vector<double>& data, int nx, int ny) {
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_r2r_2d(ny, nx, data.data(), data.data(),
                                FFTW_REDFT00, FFTW_REDFT00, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
}

// Eigenvalues of the 1-D ghost-reflected second-difference operator; the
// eigenvectors are cos(pi*k*i/(n-1)), which REDFT00 diagonalizes.
std::vector<double> neumann_eigenvalues(int n) {
    std::vector<double> lam(n);
    const double inv_h2 = static_cast<double>(n - 1) * static_cast<double>(n - 1);
    for (int k = 0; k < n; ++k)
        lam[k] = inv_h2 * (2.0 * std::cos(M_PI * k / (n - 1)) - 2.0);
    return lam;
}

double node_weight(int i, int j, int nx, int ny) {
    double w = 1.0;
    if (i == 0 || i == nx - 1) w *= 0.5;
    if (j == 0 || j == ny - 1) w *= 0.5;
    return w;
}

// The ghost-reflected system is solvable only when the trapezoid-weighted
// sum of the right-hand side vanishes. Monitor normalization fixes the plain
// node average instead, so the leftover defect is shifted onto the boundary
// rows; interior equations keep their exact right-hand side and the induced
// correction is divergence-free away from the walls.
void absorb_compatibility_defect(ScalarField2D& b) {
    const int nx = b.nx, ny = b.ny;
    double sum = 0.0, carry = 0.0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const double y = node_weight(i, j, nx, ny) * b.at(i, j) - carry;
            const double t = sum + y;
            carry = (t - sum) - y;
            sum = t;
        }
    // total boundary weight: 2(nx-2)/2 + 2(ny-2)/2 + 4/4 = nx + ny - 3
    const double sigma = sum / (nx + ny - 3);
    for (int i = 0; i < nx; ++i) {
        b.at(i, 0) -= sigma;
        b.at(i, ny - 1) -= sigma;
    }
    for (int j = 1; j < ny - 1; ++j) {
        b.at(0, j) -= sigma;
        b.at(nx - 1, j) -= sigma;
    }
}

void subtract_mean(ScalarField2D& w) {
    const double m = discrete_mean(w);
    for (double& v : w.values) v -= m;
}

ScalarField2D solve_dct(const ScalarField2D& b) {
    const int nx = b.nx, ny = b.ny;
    std::vector<double> a = b.values;
    dct1_2d(a, nx, ny);

    const auto lx = neumann_eigenvalues(nx);
    const auto ly = neumann_eigenvalues(ny);
    const double norm = 4.0 * (nx - 1) * (ny - 1);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const std::size_t k = static_cast<std::size_t>(j) * nx + i;
            if (i == 0 && j == 0)
                a[k] = 0.0;  // nullspace mode, fixed by the gauge below
            else
                a[k] /= norm * (lx[i] + ly[j]);
        }
    dct1_2d(a, nx, ny);

    ScalarField2D w(nx, ny);
    w.values = std::move(a);
    subtract_mean(w);
    return w;
}

double interior_residual_max(const ScalarField2D& w, const ScalarField2D& rhs) {
    const int nx = w.nx, ny = w.ny;
    const double ix2 = 1.0 / (w.hx() * w.hx());
    const double iy2 = 1.0 / (w.hy() * w.hy());
    double worst = 0.0;
    for (int j = 1; j < ny - 1; ++j)
        for (int i = 1; i < nx - 1; ++i) {
            const double lap =
                (w.at(i - 1, j) - 2.0 * w.at(i, j) + w.at(i + 1, j)) * ix2 +
                (w.at(i, j - 1) - 2.0 * w.at(i, j) + w.at(i, j + 1)) * iy2;
            const double r = std::abs(lap - rhs.at(i, j));
            if (r > worst) worst = r;
        }
    return worst;
}

// Conjugate gradients on the symmetrized system D*A, D = trapezoid weights.
// The right-hand side is balanced, so iterates stay orthogonal to the
// constant nullspace up to rounding; the drift is projected out periodically.
ScalarField2D solve_cg(const ScalarField2D& b, const ScalarField2D& rhs,
                       const SolverOptions& opts) {
    const int nx = b.nx, ny = b.ny;
    const std::size_t n = b.values.size();

    ScalarField2D x(nx, ny);
    std::vector<double> r(n), p(n), ap(n);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            r[static_cast<std::size_t>(j) * nx + i] =
                node_weight(i, j, nx, ny) * b.at(i, j);

    auto dot = [n](const std::vector<double>& u, const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += u[k] * v[k];
        return s;
    };
    auto project = [n](std::vector<double>& v) {
        const double m = kahan_sum(v.data(), n) / static_cast<double>(n);
        for (double& e : v) e -= m;
    };
    project(r);
    p = r;

    ScalarField2D pf(nx, ny);
    double rs = dot(r, r);
    for (int it = 0; it < opts.max_iter; ++it) {
        pf.values.assign(p.begin(), p.end());
        const ScalarField2D lap = laplacian(pf);
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                ap[static_cast<std::size_t>(j) * nx + i] =
                    node_weight(i, j, nx, ny) * lap.at(i, j);
        const double pap = dot(p, ap);
        if (pap == 0.0) break;
        const double alpha = rs / pap;
        for (std::size_t k = 0; k < n; ++k) {
            x.values[k] += alpha * p[k];
            r[k] -= alpha * ap[k];
        }
        if (it % 32 == 31) project(r);
        const double rs_new = dot(r, r);
        if (std::sqrt(rs_new) <= 0.25 * opts.tol * std::sqrt(static_cast<double>(n))) {
            subtract_mean(x);
            if (interior_residual_max(x, rhs) <= opts.tol) return x;
        }
        for (std::size_t k = 0; k < n; ++k) p[k] = r[k] + (rs_new / rs) * p[k];
        rs = rs_new;
    }
    subtract_mean(x);
    if (interior_residual_max(x, rhs) <= opts.tol) return x;
    throw SolverDiverged("cg failed to reach the residual tolerance within the iteration budget");
}

}  // namespace

SolverOptions::Method solver_method_from_name(const std::string& name) {
    if (name == "dct") return SolverOptions::Method::dct;
    if (name == "cg") return SolverOptions::Method::cg;
    throw std::invalid_argument("unknown solver '" + name + "' (expected dct or cg)");
}

ScalarField2D laplacian(const ScalarField2D& w) {
    const int nx = w.nx, ny = w.ny;
    const double ix2 = 1.0 / (w.hx() * w.hx());
    const double iy2 = 1.0 / (w.hy() * w.hy());
    auto mirrored = [&](int i, int j) {
        if (i < 0) i = -i;
        if (i >= nx) i = 2 * (nx - 1) - i;
        if (j < 0) j = -j;
        if (j >= ny) j = 2 * (ny - 1) - j;
        return w.at(i, j);
    };
    ScalarField2D out(nx, ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            out.at(i, j) =
                (mirrored(i - 1, j) - 2.0 * w.at(i, j) + mirrored(i + 1, j)) * ix2 +
                (mirrored(i, j - 1) - 2.0 * w.at(i, j) + mirrored(i, j + 1)) * iy2;
    return out;
}

ScalarField2D solve_neumann_poisson(const ScalarField2D& rhs,
                                    const SolverOptions& opts) {
    const double mean = discrete_mean(rhs);
    if (!(std::abs(mean) <= kCompatTol))
        throw IncompatibleRHS("right-hand side mean exceeds compatibility tolerance");

    ScalarField2D b = rhs;
    absorb_compatibility_defect(b);

    if (opts.method == SolverOptions::Method::cg) return solve_cg(b, rhs, opts);

    ScalarField2D w = solve_dct(b);
    if (interior_residual_max(w, rhs) > opts.tol) {
        // one pass of iterative refinement squeezes out transform roundoff
        ScalarField2D res = laplacian(w);
        for (std::size_t k = 0; k < res.values.size(); ++k)
            res.values[k] = b.values[k] - res.values[k];
        const ScalarField2D dw = solve_dct(res);
        for (std::size_t k = 0; k < w.values.size(); ++k)
            w.values[k] += dw.values[k];
        subtract_mean(w);
    }
    if (interior_residual_max(w, rhs) > opts.tol)
        throw SolverDiverged("direct solve residual exceeds tolerance");
    return w;
}

VectorField2D velocity_from_monitor(const MonitorPair& pair,
                                    const SolverOptions& opts) {
    const int nx = pair.f0.nx, ny = pair.f0.ny;
    if (nx != pair.f1.nx || ny != pair.f1.ny)
        throw DimensionMismatch("monitor pair lattices disagree");

    // -d/dt(1/f) is constant in t under the reciprocal-linear interpolation
    ScalarField2D rhs(nx, ny);
    for (std::size_t k = 0; k < rhs.values.size(); ++k)
        rhs.values[k] = 1.0 / pair.f0.values[k] - 1.0 / pair.f1.values[k];

    const ScalarField2D w = solve_neumann_poisson(rhs, opts);

    VectorField2D u(nx, ny);
    const double i2hx = 1.0 / (2.0 * w.hx());
    const double i2hy = 1.0 / (2.0 * w.hy());
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            // normal components vanish exactly on the walls: the reflected
            // central difference across a wall node is identically zero
            u.x(i, j) = (i == 0 || i == nx - 1)
                            ? 0.0
                            : (w.at(i + 1, j) - w.at(i - 1, j)) * i2hx;
            u.y(i, j) = (j == 0 || j == ny - 1)
                            ? 0.0
                            : (w.at(i, j + 1) - w.at(i, j - 1)) * i2hy;
        }
    return u;
}

}  // namespace deformlab
