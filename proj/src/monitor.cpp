#include "deformlab/monitor.hpp"

#include <cmath>
#include <stdexcept>

#include "deformlab/errors.hpp"

namespace deformlab {

namespace {

constexpr double kNormalizationTol = 1e-12;

void require_positive(const ScalarField2D& f) {
    for (double v : f.values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw NonPositiveMonitor("monitor values must be strictly positive and finite");
}

}  // namespace

ScalarField2D normalize_monitor(const ScalarField2D& raw) {
    require_positive(raw);
    const double scale = discrete_mean_reciprocal(raw);
    ScalarField2D out = raw;
    for (double& v : out.values) v *= scale;
    return out;
}

ScalarField2D image_to_monitor(const GrayImage& img, double alpha) {
    if (img.empty()) throw EmptyImage("image has no pixels");
    if (!(alpha >= 0.0))
        throw std::invalid_argument("alpha must be non-negative");
    ScalarField2D raw(img.width, img.height);
    for (std::size_t k = 0; k < raw.values.size(); ++k)
        raw.values[k] = 1.0 + alpha * (img.pixels[k] / 255.0);
    return normalize_monitor(raw);
}

ScalarField2D monitor_at_time(const MonitorPair& pair, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw TimeOutOfRange("time must lie in [0,1]");
    if (t == 0.0) return pair.f0;
    if (t == 1.0) return pair.f1;
    ScalarField2D out(pair.f0.nx, pair.f0.ny);
    const double s = 1.0 - t;
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = 1.0 / (s / pair.f0.values[k] + t / pair.f1.values[k]);
    return out;
}

ScalarField2D uniform_monitor(int nx, int ny) { return ScalarField2D(nx, ny, 1.0); }

MonitorPair make_monitor_pair(ScalarField2D f0, ScalarField2D f1) {
    if (f0.nx != f1.nx || f0.ny != f1.ny)
        throw DimensionMismatch("monitor pair lattices disagree");
    require_positive(f0);
    require_positive(f1);
    if (std::abs(discrete_mean_reciprocal(f0) - 1.0) > kNormalizationTol ||
        std::abs(discrete_mean_reciprocal(f1) - 1.0) > kNormalizationTol)
        throw std::invalid_argument("monitors must be normalized (mean of 1/f = 1)");
    return MonitorPair{std::move(f0), std::move(f1)};
}

}  // namespace deformlab
