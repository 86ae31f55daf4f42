#pragma once

#include "deformlab/field.hpp"
#include "deformlab/image.hpp"

namespace deformlab {

/// Initial and target monitor functions on a shared lattice, both normalized
/// so that the node average of 1/f equals 1 (unit-square volume constraint).
struct MonitorPair {
    ScalarField2D f0;
    ScalarField2D f1;
};

/// Scale a strictly positive field so the node average of 1/f becomes 1.
/// Throws NonPositiveMonitor if any sample is <= 0 (or NaN).
ScalarField2D normalize_monitor(const ScalarField2D& raw);

/// Build a monitor from pixel intensities: f_raw = 1 + alpha * I / 255,
/// normalized afterwards. The lattice matches the pixel lattice one-to-one.
/// alpha = 0 yields the uniform monitor (identity deformation downstream).
ScalarField2D image_to_monitor(const GrayImage& img, double alpha);

/// Monitor at intermediate time t in [0,1], interpolated linearly in 1/f:
/// 1/f(x,t) = (1-t)/f0(x) + t/f1(x). Keeps the mean-of-reciprocal constraint
/// for every t and makes d/dt(1/f) constant in time.
ScalarField2D monitor_at_time(const MonitorPair& pair, double t);

/// The uniform monitor f == 1 (normalized by construction).
ScalarField2D uniform_monitor(int nx, int ny);

/// Validates dimensions, positivity and normalization (1e-12) of both fields.
MonitorPair make_monitor_pair(ScalarField2D f0, ScalarField2D f1);

}  // namespace deformlab
