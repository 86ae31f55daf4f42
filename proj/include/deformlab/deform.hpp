#pragma once

#include <array>
#include <string>

#include "deformlab/errors.hpp"
#include "deformlab/field.hpp"
#include "deformlab/monitor.hpp"

namespace deformlab {

/// Bilinear interpolation of a scalar field at (x, y) in [0,1]^2.
/// Points outside the square are clamped onto it. Reproduces node values
/// at lattice nodes (up to rounding).
double sample_scalar(const ScalarField2D& f, double x, double y);

/// Sampling rule for monitor-role fields: interpolate 1/f bilinearly and
/// return the reciprocal. Preserves positivity and matches the
/// reciprocal-linear time interpolation used by monitor_at_time.
double sample_monitor(const ScalarField2D& f, double x, double y);

/// Bilinear interpolation of both velocity components.
std::array<double, 2> sample_vector(const VectorField2D& u, double x, double y);

/// The final grid folded: some interior node has a non-positive discrete
/// Jacobian determinant. Carries the offending grid for diagnosis.
class FoldDetected : public Error {
public:
    FoldDetected(const std::string& what, Grid2D grid, double min_jacobian)
        : Error(what), grid_(std::move(grid)), min_jacobian_(min_jacobian) {}

    const Grid2D& grid() const noexcept { return grid_; }
    double min_jacobian() const noexcept { return min_jacobian_; }

private:
    Grid2D grid_;
    double min_jacobian_;
};

/// Transport the identity grid to time 1 with classical fixed-step RK4:
///   dphi/dt = f(phi, t) * u(phi)
/// where f is sampled with the reciprocal-bilinear rule at the interpolated
/// time and u bilinearly. Stage and step results are clamped to [0,1]^2 and
/// boundary nodes keep their wall coordinate (tangential sliding only).
/// Throws FoldDetected if the final grid has a non-positive interior
/// Jacobian determinant.
Grid2D integrate_deformation(const MonitorPair& pair, const VectorField2D& u,
                             int steps);

}  // namespace deformlab
