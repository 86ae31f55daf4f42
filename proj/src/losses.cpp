#include "deformlab/losses.hpp"

#include <cmath>

#include "deformlab/errors.hpp"
#include "deformlab/features.hpp"

namespace deformlab {

double content_loss_cv(const GrayImage& hr, const GrayImage& sr, double alpha,
                       int steps, const SolverOptions& opts) {
    if (hr.width != sr.width || hr.height != sr.height)
        throw DimensionMismatch("image dimensions disagree");
    const ScalarField2D cv_hr = cv_feature_map(hr, alpha, steps, opts);
    const ScalarField2D cv_sr = cv_feature_map(sr, alpha, steps, opts);
    double sum = 0.0, carry = 0.0;
    for (std::size_t k = 0; k < cv_hr.values.size(); ++k) {
        const double d = cv_hr.values[k] - cv_sr.values[k];
        const double y = d * d - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(cv_hr.values.size());
}

double adversarial_loss(const DiscriminatorProbs& d) {
    if (d.probs.empty()) throw EmptyBatch("no discriminator probabilities given");
    double sum = 0.0;
    for (double p : d.probs) {
        if (!(p > 0.0) || p > 1.0)
            throw InvalidProbability("probabilities must lie in (0, 1]");
        sum += -std::log(p);
    }
    return sum;
}

double perceptual_loss(double content, double adversarial) {
    if (!std::isfinite(content) || !std::isfinite(adversarial))
        throw NonFiniteInput("loss terms must be finite");
    return content + 1e-3 * adversarial;
}

}  // namespace deformlab
