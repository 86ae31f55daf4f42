#pragma once

#include "deformlab/deform.hpp"
#include "deformlab/field.hpp"
#include "deformlab/image.hpp"
#include "deformlab/poisson.hpp"

namespace deformlab {

/// Discrete Jacobian determinant of the map at every node:
/// J = x_xi * y_eta - x_eta * y_xi, central differences at interior nodes,
/// second-order one-sided on the boundary, spacings of the reference lattice.
ScalarField2D jacobian_determinant(const Grid2D& grid);

/// Scalar 2-D curl of the displacement d = phi - xi:
/// CV = d(dy)/dxi - d(dx)/deta, same stencils as jacobian_determinant.
/// The velocity that builds the map is curl-free; the composed map is not,
/// so this carries the rotational signature of the deformation.
ScalarField2D curl_of_map(const Grid2D& grid);

/// Affine min-max normalization to [0, 255] with round-half-up.
/// Constant fields map to mid-gray 128. Throws NonFiniteField.
GrayImage render_feature_image(const ScalarField2D& field);

struct FeatureMaps {
    ScalarField2D jd;
    ScalarField2D cv;
    Grid2D grid;
};

/// Full pipeline: image -> monitor -> velocity -> deformed grid -> JD and CV
/// feature maps on the reference lattice (one node per pixel).
FeatureMaps feature_maps(const GrayImage& img, double alpha, int steps,
                         const SolverOptions& opts = {});

/// CV map of an image (the feature used by the content loss).
ScalarField2D cv_feature_map(const GrayImage& img, double alpha, int steps,
                             const SolverOptions& opts = {});

}  // namespace deformlab
