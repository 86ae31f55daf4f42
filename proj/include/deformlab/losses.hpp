#pragma once

#include <vector>

#include "deformlab/image.hpp"
#include "deformlab/poisson.hpp"

namespace deformlab {

/// Discriminator outputs, one probability in (0, 1] per sample.
struct DiscriminatorProbs {
    std::vector<double> probs;
};

/// Mean squared difference between the CV feature maps of the two images,
/// both computed with identical pipeline parameters.
double content_loss_cv(const GrayImage& hr, const GrayImage& sr, double alpha,
                       int steps, const SolverOptions& opts = {});

/// Sum over samples of -log(p), natural logarithm.
double adversarial_loss(const DiscriminatorProbs& d);

/// Weighted sum: content + 1e-3 * adversarial.
double perceptual_loss(double content, double adversarial);

}  // namespace deformlab
