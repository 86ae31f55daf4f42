#pragma once

#include "deformlab/field.hpp"
#include "deformlab/monitor.hpp"

namespace deformlab {

struct SolverOptions {
    enum class Method { dct, cg };

    double tol = 1e-10;     ///< max-norm residual target at interior nodes
    int max_iter = 20000;   ///< iteration budget (cg only)
    Method method = Method::dct;
};

SolverOptions::Method solver_method_from_name(const std::string& name);

/// Solve the pure-Neumann Poisson problem on the unit square:
/// 5-point Laplacian with ghost-node reflection (dw/dn = 0 on the walls),
/// zero-mean gauge. The right-hand side must satisfy the compatibility
/// constraint |mean(rhs)| <= 1e-8; the residual contract holds at interior
/// nodes. Throws IncompatibleRHS / SolverDiverged.
ScalarField2D solve_neumann_poisson(const ScalarField2D& rhs,
                                    const SolverOptions& opts = {});

/// Ghost-reflected 5-point Laplacian at every node (reflection across the
/// boundary node enforces the homogeneous Neumann condition).
ScalarField2D laplacian(const ScalarField2D& w);

/// Curl-free velocity that transports mass between the two monitors:
/// solves laplacian(w) = 1/f0 - 1/f1 and returns u = grad_h w with central
/// differences at interior nodes. Normal components on the boundary are
/// exactly zero (slippery walls); tangential components use central
/// differences along the wall.
VectorField2D velocity_from_monitor(const MonitorPair& pair,
                                    const SolverOptions& opts = {});

}  // namespace deformlab
